"""On-disk cache of extracted models.

Each entry lives at ``cache_dir/<kind>/<key>`` where the key hashes the
extractor parameters together with the content of every input file. An
entry is a JSON envelope; its payload is DIMACS text for variability
models, CSV text for build models and JSON for code models.
"""

from __future__ import annotations

import hashlib
import json
import logging
from pathlib import Path
from typing import Iterable

from ..errors import CacheCorrupt, WorkbenchError
from ..extract.build_csv import parse_build_model_csv, write_build_model_csv
from ..extract.codeblocks import BLANK, CODE, COMMENT, DIRECTIVE, CodeBlock, SourceFileBlocks
from ..extract.dimacs import parse_dimacs, write_dimacs
from ..logic import parse_formula, to_string
from .output import atomic_write

log = logging.getLogger("splworkbench.cache")

HASH_ALGORITHM = "sha256"
FORMAT_VERSION = 1
KINDS = ("code", "build", "vm")

_KIND_CHARS = {CODE: "c", BLANK: "b", COMMENT: "m", DIRECTIVE: "d"}
_CHAR_KINDS = {v: k for k, v in _KIND_CHARS.items()}


def file_digest(path: Path) -> str:
    h = hashlib.new(HASH_ALGORITHM)
    with open(path, "rb") as fh:
        for chunk in iter(lambda: fh.read(1 << 16), b""):
            h.update(chunk)
    return h.hexdigest()


def bytes_digest(data: bytes) -> str:
    return hashlib.new(HASH_ALGORITHM, data).hexdigest()


def tree_digest(root: Path, rels: Iterable[str]) -> str:
    """Digest over relative names and contents, in the given order."""
    h = hashlib.new(HASH_ALGORITHM)
    for rel in rels:
        h.update(rel.encode("utf-8") + b"\0" + file_digest(root / rel).encode("ascii") + b"\n")
    return h.hexdigest()


def cache_key(kind: str, params: dict, input_hash: str) -> str:
    blob = json.dumps({"kind": kind, "params": params, "input": input_hash}, sort_keys=True)
    return bytes_digest(blob.encode("utf-8"))


def _block_to_json(block: CodeBlock) -> dict:
    return {
        "condition": to_string(block.condition),
        "pc": to_string(block.presence_condition),
        "start": block.start_line,
        "end": block.end_line,
        "kind": block.kind,
        "children": [_block_to_json(c) for c in block.children],
    }


def _block_from_json(data: dict) -> CodeBlock:
    return CodeBlock(
        parse_formula(data["condition"]),
        parse_formula(data["pc"]),
        int(data["start"]),
        int(data["end"]),
        data["kind"],
        tuple(_block_from_json(c) for c in data["children"]),
    )


def code_to_json(files: list[SourceFileBlocks]) -> list:
    return [
        {
            "path": sf.path,
            "line_count": sf.line_count,
            "line_kinds": "".join(_KIND_CHARS[k] for k in sf.line_kinds),
            "blocks": [_block_to_json(b) for b in sf.top_blocks],
        }
        for sf in files
    ]


def code_from_json(data: list) -> list[SourceFileBlocks]:
    return [
        SourceFileBlocks(
            item["path"],
            int(item["line_count"]),
            tuple(_CHAR_KINDS[ch] for ch in item["line_kinds"]),
            tuple(_block_from_json(b) for b in item["blocks"]),
        )
        for item in data
    ]


def _encode(kind: str, model):
    if kind == "code":
        return code_to_json(model)
    if kind == "build":
        return write_build_model_csv(model)
    return write_dimacs(model)


def _decode(kind: str, payload, source_path: str | None):
    if kind == "code":
        return code_from_json(payload)
    if kind == "build":
        return parse_build_model_csv(payload, source_path)
    return parse_dimacs(payload, source_path)


class ModelCache:
    def __init__(self, cache_dir: Path):
        self.cache_dir = Path(cache_dir)

    def path(self, kind: str, key: str) -> Path:
        if kind not in KINDS:
            raise ValueError(f"unknown cache kind {kind!r}")
        return self.cache_dir / kind / key

    def write(self, kind: str, key: str, input_hash: str, model, warnings: list[str] = ()) -> Path:
        envelope = {
            "format": FORMAT_VERSION,
            "kind": kind,
            "key": key,
            "input_hash": input_hash,
            "warnings": list(warnings),
            "payload": _encode(kind, model),
        }
        target = self.path(kind, key)
        atomic_write(target, json.dumps(envelope, separators=(",", ":")).encode("utf-8"))
        return target

    def load(self, kind: str, key: str, input_hash: str, source_path: str | None = None):
        """Return ``(model, stored_warnings)`` or None; raise CacheCorrupt on unreadable entries."""
        target = self.path(kind, key)
        if not target.is_file():
            return None
        try:
            envelope = json.loads(target.read_text(encoding="utf-8"))
            if envelope.get("format") != FORMAT_VERSION or envelope.get("kind") != kind:
                raise CacheCorrupt(target, "unexpected envelope")
            if envelope.get("input_hash") != input_hash:
                return None
            return _decode(kind, envelope["payload"], source_path), list(envelope.get("warnings", []))
        except CacheCorrupt:
            raise
        except (ValueError, KeyError, TypeError, AttributeError, WorkbenchError) as exc:
            raise CacheCorrupt(target, str(exc)) from None

    def read(self, kind: str, key: str, input_hash: str, source_path: str | None = None,
             warnings: list[str] | None = None):
        """Like ``load`` but a corrupt entry is a warning and a miss."""
        try:
            return self.load(kind, key, input_hash, source_path)
        except CacheCorrupt as exc:
            message = f"{exc}; extracting again"
            log.warning(message)
            if warnings is not None:
                warnings.append(message)
            return None
