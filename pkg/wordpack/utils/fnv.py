FNV64_OFFSET_BASIS = 0xCBF29CE484222325
FNV64_PRIME = 0x100000001B3
_MASK64 = 0xFFFFFFFFFFFFFFFF


def fnv1a_64(data: bytes) -> int:
    """
    64-bit FNV-1a hash of a byte string.
    Args:
      data (bytes): The bytes to hash.
    Returns:
      int: The unsigned 64-bit hash value.
    Examples:
      >>> hex(fnv1a_64(b""))
      '0xcbf29ce484222325'
      >>> hex(fnv1a_64(b"a"))
      '0xaf63dc4c8601ec8c'
    """
    hash_val = FNV64_OFFSET_BASIS
    for byte in data:
        hash_val ^= byte
        hash_val = (hash_val * FNV64_PRIME) & _MASK64
    return hash_val
