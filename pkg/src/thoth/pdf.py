"""PDF text extraction behind a small adapter interface.

Only text-layer extraction is supported (no OCR, no layout analysis).
The default adapter is a self-contained reader for unencrypted PDFs with
uncompressed or Flate-compressed content streams and simple (one-byte)
font encodings, which covers the common "digital text" PDF. Anything it
cannot read raises :class:`~thoth.errors.ExtractionError` with a stable
reason code: "corrupt", "encrypted" or "image_only".

Pages are joined by a blank line, so page breaks read as paragraph breaks.
"""

from __future__ import annotations

import base64
import re
import zlib
from typing import Protocol

from .errors import ExtractionError

__all__ = ["PdfTextExtractor", "MiniPdfExtractor", "extract_pdf_text"]

_OBJ_RE = re.compile(rb"(\d+)\s+\d+\s+obj(.*?)endobj", re.S)
_STREAM_RE = re.compile(rb"stream\r?\n(.*)endstream", re.S)
_FILTER_RE = re.compile(rb"/Filter\s*(\[[^\]]*\]|/\w+)")
_REF_RE = re.compile(rb"(\d+)\s+0\s+R")
# operators that move the text cursor to a new position or line
_BREAK_OPS = {b"Td", b"TD", b"T*", b"Tm"}
_SHOW_OPS = {b"Tj", b"'", b'"'}
_DELIMS = b"()<>[]{}/% \t\r\n\x00\x0c"


class PdfTextExtractor(Protocol):
    """Stable interface for PDF text extraction backends."""

    def extract(self, data: bytes) -> str: ...


def _object_map(data: bytes) -> dict[int, bytes]:
    return {int(m.group(1)): m.group(2) for m in _OBJ_RE.finditer(data)}


def _stream_bytes(body: bytes) -> bytes | None:
    """Decode one object's stream; None when a filter is unsupported."""
    m = _STREAM_RE.search(body)
    if m is None:
        return None
    data = m.group(1)
    fm = _FILTER_RE.search(body[: m.start()])
    filters = re.findall(rb"/(\w+)", fm.group(1)) if fm else []
    for f in filters:
        try:
            if f == b"ASCII85Decode":
                data = base64.a85decode(data.strip(), adobe=True)
            elif f == b"ASCIIHexDecode":
                digits = re.sub(rb"[\s>]", b"", data)
                if len(digits) % 2:
                    digits += b"0"
                data = bytes.fromhex(digits.decode("ascii"))
            elif f == b"FlateDecode":
                d = zlib.decompressobj()
                data = d.decompress(data) + d.flush()
            else:
                return None  # image or exotic filter: not a text stream
        except (ValueError, zlib.error):
            return None
    return data


def _parse_literal_string(data: bytes, i: int) -> tuple[bytes, int]:
    """Parse a ( ... ) string starting at the opening paren."""
    out = bytearray()
    depth = 1
    i += 1
    n = len(data)
    while i < n and depth > 0:
        c = data[i]
        if c == 0x5C:  # backslash
            i += 1
            if i >= n:
                break
            e = data[i]
            mapped = {0x6E: 0x0A, 0x72: 0x0D, 0x74: 0x09, 0x62: 0x08, 0x66: 0x0C}
            if e in mapped:
                out.append(mapped[e])
                i += 1
            elif 0x30 <= e <= 0x37:  # octal escape, up to 3 digits
                oct_digits = bytearray()
                while i < n and len(oct_digits) < 3 and 0x30 <= data[i] <= 0x37:
                    oct_digits.append(data[i])
                    i += 1
                out.append(int(oct_digits.decode(), 8) & 0xFF)
            elif e in (0x0A, 0x0D):  # line continuation
                i += 1
                if e == 0x0D and i < n and data[i] == 0x0A:
                    i += 1
            else:
                out.append(e)
                i += 1
            continue
        if c == 0x28:  # (
            depth += 1
        elif c == 0x29:  # )
            depth -= 1
            if depth == 0:
                i += 1
                break
        out.append(c)
        i += 1
    return bytes(out), i


def _parse_hex_string(data: bytes, i: int) -> tuple[bytes, int]:
    j = data.find(b">", i)
    if j == -1:
        return b"", len(data)
    digits = re.sub(rb"\s", b"", data[i + 1:j])
    if len(digits) % 2:
        digits += b"0"
    try:
        return bytes.fromhex(digits.decode("ascii")), j + 1
    except ValueError:
        return b"", j + 1


def _content_text(stream: bytes) -> str:
    """Pull shown strings out of one content stream, in order."""
    segments: list[str] = []
    pending_break = False
    in_array = False
    array_buf: list[bytes] = []
    last_string = b""
    i = 0
    n = len(stream)

    def emit(raw: bytes, break_first: bool):
        nonlocal pending_break
        if break_first or pending_break:
            if segments:
                segments.append("\n")
            pending_break = False
        segments.append(raw.decode("cp1252", errors="replace"))

    while i < n:
        c = stream[i]
        if c == 0x28:  # (
            s, i = _parse_literal_string(stream, i)
            if in_array:
                array_buf.append(s)
            else:
                last_string = s
            continue
        if c == 0x3C:  # dict << or hex string <
            if stream.startswith(b"<<", i):
                i += 2
                continue
            s, i = _parse_hex_string(stream, i)
            if in_array:
                array_buf.append(s)
            else:
                last_string = s
            continue
        if c == 0x5B:  # [
            in_array = True
            array_buf = []
            i += 1
            continue
        if c == 0x5D:  # ]
            in_array = False
            i += 1
            continue
        if c in _DELIMS:
            i += 1
            continue
        j = i
        while j < n and stream[j] not in _DELIMS:
            j += 1
        op = stream[i:j]
        if op == b"TJ":
            emit(b"".join(array_buf), break_first=False)
            array_buf = []
        elif op in _SHOW_OPS:
            # ' and " show on the next line
            emit(last_string, break_first=op != b"Tj")
            last_string = b""
        elif op in _BREAK_OPS:
            pending_break = True
        i = j
    return "".join(segments)


class MiniPdfExtractor:
    """Built-in text-layer extractor for simple, unencrypted PDFs."""

    def extract(self, data: bytes) -> str:
        if not data.startswith(b"%PDF-"):
            raise ExtractionError("corrupt", "missing %PDF header")
        if b"/Encrypt" in data:
            raise ExtractionError("encrypted")
        objects = _object_map(data)
        if not objects:
            raise ExtractionError("corrupt", "no objects found")

        pages = self._page_objects(objects)
        page_texts: list[str] = []
        if pages:
            for body in pages:
                streams = [
                    s for num in self._content_refs(body)
                    if num in objects and (s := _stream_bytes(objects[num])) is not None
                ]
                text = "\n".join(t for s in streams if (t := _content_text(s)))
                page_texts.append(text)
        else:
            # no parseable page tree: fall back to every stream in object order
            for num in sorted(objects):
                s = _stream_bytes(objects[num])
                if s is not None:
                    page_texts.append(_content_text(s))

        result = "\n\n".join(t for t in page_texts if t.strip())
        if not result.strip():
            raise ExtractionError("image_only", "no text layer found")
        return result

    def _page_objects(self, objects: dict[int, bytes]) -> list[bytes]:
        roots = [num for num, body in objects.items()
                 if b"/Type" in body and b"/Pages" in body and b"/Kids" in body]
        ordered: list[bytes] = []

        def walk(num: int, seen: set[int]):
            if num in seen or num not in objects:
                return
            seen.add(num)
            body = objects[num]
            if b"/Kids" in body:
                m = re.search(rb"/Kids\s*\[(.*?)\]", body, re.S)
                if m:
                    for ref in _REF_RE.finditer(m.group(1)):
                        walk(int(ref.group(1)), seen)
            elif b"/Page" in body:
                ordered.append(body)

        seen: set[int] = set()
        for root in sorted(roots):
            walk(root, seen)
        return ordered

    def _content_refs(self, page_body: bytes) -> list[int]:
        m = re.search(rb"/Contents\s*(\[.*?\]|\d+\s+0\s+R)", page_body, re.S)
        if m is None:
            return []
        return [int(r.group(1)) for r in _REF_RE.finditer(m.group(1))]


_DEFAULT_EXTRACTOR = MiniPdfExtractor()


def extract_pdf_text(pdf_bytes: bytes, extractor: PdfTextExtractor | None = None) -> str:
    """Extract the text layer of a PDF, pages separated by blank lines."""
    return (extractor or _DEFAULT_EXTRACTOR).extract(pdf_bytes)
