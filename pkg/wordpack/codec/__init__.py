from wordpack.codec.case_plan import CasePlan, case_plan
from wordpack.codec.decoder import decode
from wordpack.codec.emission import Field, FieldKind, iter_fields
from wordpack.codec.encoder import encode
from wordpack.codec.payload import EncodeOptions, Payload
from wordpack.codec.word_segmentation import Piece, segment_word
