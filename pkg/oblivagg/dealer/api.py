from oblivagg.dealer.dealer import (  # noqa: F401
    USER_KEY_MAP,
    check_source_key,
    derive_user_key,
    derive_user_keys,
    generate_source_key,
)
from oblivagg.dealer.keyfile import (  # noqa: F401
    decode_key_file,
    encode_key_file,
    read_source_key,
    read_user_key,
    write_source_key,
    write_user_key,
)
