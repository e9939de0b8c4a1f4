from wordpack.container.container import (
    HEADER,
    MAGIC,
    Container,
    compress,
    decompress,
    frame_payload,
    inspect_container,
)
