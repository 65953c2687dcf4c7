"""Canonical serialization and digests shared by all artifact writers."""

import hashlib
import json

FORMAT_VERSION = 1

_FNV_OFFSET = 0xCBF29CE484222325
_FNV_PRIME = 0x100000001B3
_MASK64 = 0xFFFFFFFFFFFFFFFF


def canonical_json(obj) -> str:
    """Stable textual form: sorted keys, no extra whitespace, raw unicode."""
    return json.dumps(obj, sort_keys=True, ensure_ascii=False, separators=(",", ":"))


def content_digest(obj) -> str:
    return hashlib.sha256(canonical_json(obj).encode("utf-8")).hexdigest()


def fnv1a64(data: bytes) -> int:
    h = _FNV_OFFSET
    for b in data:
        h = ((h ^ b) * _FNV_PRIME) & _MASK64
    return h


def artifact_header(kind: str, seed=None, config=None) -> dict:
    from . import __version__

    return {
        "format_version": FORMAT_VERSION,
        "kind": kind,
        "tool_version": __version__,
        "seed": seed,
        "config_digest": content_digest(config or {}),
    }


def write_json_artifact(path, payload: dict) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(canonical_json(payload))
        fh.write("\n")


def read_json_artifact(path) -> dict:
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)
