"""Bridge from sentence-embedding models to the EMB1 embedding-file format."""

from .export import EncodeError, ExportJob, ModelLoadError, export_embeddings, export_labels

__version__ = "0.1.0"

__all__ = [
    "EncodeError",
    "ExportJob",
    "ModelLoadError",
    "export_embeddings",
    "export_labels",
]
