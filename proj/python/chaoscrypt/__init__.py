"""Chaotic image cipher (cat-map shuffle + Chen keystream XOR) and the
chosen-plaintext attack that recovers images without the key.

The heavy lifting lives in the compiled extension ``chaoscrypt._core``;
this package just re-exports its public surface.
"""

from ._core import (
    AttackTranscript,
    ChaosCryptError,
    KeyOracle,
    KNOWN_ANSWER,
    Oracle,
    OracleInconsistencyError,
    PartsOracle,
    PermutationMap,
    PixelGrid,
    ProtocolError,
    RemoteOracle,
    SecretKey,
    build_probes,
    decrypt,
    derive_keystream,
    encrypt,
    encrypt_with_parts,
    format_key_text,
    full_attack,
    load_key_file,
    parse_key_text,
    permutation_for_key,
    probe_count,
    read_pgm,
    recover_keystream,
    recover_permutation,
    recover_plaintext,
    shuffle,
    unshuffle,
    write_pgm,
)

__all__ = [
    "AttackTranscript",
    "ChaosCryptError",
    "KeyOracle",
    "KNOWN_ANSWER",
    "Oracle",
    "OracleInconsistencyError",
    "PartsOracle",
    "PermutationMap",
    "PixelGrid",
    "ProtocolError",
    "RemoteOracle",
    "SecretKey",
    "build_probes",
    "decrypt",
    "derive_keystream",
    "encrypt",
    "encrypt_with_parts",
    "format_key_text",
    "full_attack",
    "load_key_file",
    "parse_key_text",
    "permutation_for_key",
    "probe_count",
    "read_pgm",
    "recover_keystream",
    "recover_permutation",
    "recover_plaintext",
    "shuffle",
    "unshuffle",
    "write_pgm",
]
