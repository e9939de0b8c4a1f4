from abc import ABC, abstractmethod


class BaseSecondStage(ABC):
    """A lossless byte-level stage applied to the padded code payload."""

    # Container flag bit recorded when this stage ran
    flag = 0

    @abstractmethod
    def compress(self, data):
        """
        Compresses payload bytes.
        Args:
          data (bytes): Padded payload bytes.
        Returns:
          bytes: The container body.
        """
        pass

    @abstractmethod
    def decompress(self, body, expected_length):
        """
        Restores payload bytes.
        Args:
          body (bytes): The container body.
          expected_length (int): Payload size in bytes declared by the header.
        Returns:
          bytes: The payload bytes.
        Raises:
          CorruptionError: If the body cannot be restored.
        """
        pass

    def __repr__(self):
        return f"{type(self).__name__}()"


class IdentityStage(BaseSecondStage):
    def compress(self, data):
        return bytes(data)

    def decompress(self, body, expected_length):
        return bytes(body)
