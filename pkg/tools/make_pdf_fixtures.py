#!/usr/bin/env python3
"""Generate the PDF fixtures used by the extraction tests.

Requires reportlab (dev dependency). Run from the repo root:
    python3 tools/make_pdf_fixtures.py
"""

from pathlib import Path

from reportlab.lib.pagesizes import letter
from reportlab.lib.pdfencrypt import StandardEncryption
from reportlab.pdfgen.canvas import Canvas

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

PARA_1 = "The first paragraph sits on the first page."
PARA_2 = "The second paragraph follows on the next page."


def hello(path: Path):
    c = Canvas(str(path), pagesize=letter)
    c.drawString(72, 720, "Hello world")
    c.showPage()
    c.save()


def two_paragraphs(path: Path):
    c = Canvas(str(path), pagesize=letter)
    c.drawString(72, 720, PARA_1)
    c.showPage()
    c.drawString(72, 720, PARA_2)
    c.showPage()
    c.save()


def encrypted(path: Path):
    c = Canvas(str(path), pagesize=letter, encrypt=StandardEncryption("owner-pw"))
    c.drawString(72, 720, "Secret text")
    c.showPage()
    c.save()


def image_only(path: Path):
    c = Canvas(str(path), pagesize=letter)
    c.rect(72, 600, 200, 120, fill=1)
    c.circle(300, 400, 50, fill=1)
    c.showPage()
    c.save()


def corrupt(path: Path):
    data = bytearray((FIXTURES / "hello.pdf").read_bytes())
    data[:8] = b"XXXXXXXX"
    path.write_bytes(bytes(data))


def main():
    FIXTURES.mkdir(exist_ok=True)
    hello(FIXTURES / "hello.pdf")
    two_paragraphs(FIXTURES / "two_paragraphs.pdf")
    encrypted(FIXTURES / "encrypted.pdf")
    image_only(FIXTURES / "image_only.pdf")
    corrupt(FIXTURES / "corrupt.pdf")
    print("wrote fixtures to", FIXTURES)


if __name__ == "__main__":
    main()
