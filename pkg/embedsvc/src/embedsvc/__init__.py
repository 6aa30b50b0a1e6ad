"""Sentence-embedding inference service.

Serves POST /embed and GET /health over JSON. The default backend wraps the
pretrained all-MiniLM-L6-v2 sentence encoder (384-dimensional vectors); set
EMBEDSVC_STUB=1 for a deterministic offline stub that needs no model files.
"""

__version__ = "0.1.0"
