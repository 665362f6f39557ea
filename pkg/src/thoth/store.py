"""Content-addressed document store on the local filesystem.

Documents are identified by the SHA-256 of their extracted text, so
uploading identical content is idempotent. One JSON file per document;
creation is atomic (link-into-place), concurrent writers of the same id
both end up with the single stored copy.
"""

from __future__ import annotations

import hashlib
import json
import os
import re
import tempfile
from dataclasses import asdict, dataclass
from datetime import datetime, timezone
from pathlib import Path

__all__ = ["StoredDocument", "DocumentStore", "content_id"]


def content_id(text: str) -> str:
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


@dataclass(frozen=True, slots=True)
class StoredDocument:
    id: str
    original_filename: str
    media_type: str  # "text" or "pdf"
    text: str
    created_at: str  # RFC 3339, UTC


class DocumentStore:
    def __init__(self, root: str | Path):
        self.root = Path(root)
        self.root.mkdir(parents=True, exist_ok=True)

    def _path(self, doc_id: str) -> Path:
        return self.root / f"{doc_id}.json"

    def put(self, filename: str, media_type: str, text: str) -> tuple[StoredDocument, bool]:
        """Store extracted text; returns (document, created).

        ``created`` is False when the same content already existed, in
        which case the previously stored document is returned unchanged.
        """
        if not text:
            raise ValueError("refusing to store an empty document")
        doc_id = content_id(text)
        path = self._path(doc_id)
        doc = StoredDocument(
            id=doc_id,
            original_filename=filename,
            media_type=media_type,
            text=text,
            created_at=datetime.now(timezone.utc).isoformat(),
        )
        fd, tmp = tempfile.mkstemp(dir=self.root, suffix=".tmp")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as f:
                json.dump(asdict(doc), f, ensure_ascii=False)
            try:
                os.link(tmp, path)  # atomic create-if-absent
            except FileExistsError:
                return self.get(doc_id), False
        finally:
            os.unlink(tmp)
        return doc, True

    def get(self, doc_id: str) -> StoredDocument | None:
        """Exact-match lookup; ids are lowercase hex and case-sensitive."""
        if not re.fullmatch(r"[0-9a-f]{64}", doc_id):
            return None
        path = self._path(doc_id)
        if not path.is_file():
            return None
        with open(path, encoding="utf-8") as f:
            return StoredDocument(**json.load(f))
