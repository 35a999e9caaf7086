"""Prometheus metrics exposition."""

from pathlib import Path

from prometheus_client import (
    CONTENT_TYPE_LATEST,
    REGISTRY,
    Counter,
    Histogram,
    Info,
    generate_latest,
    write_to_textfile,
)

from nakayama_ar import __version__

# Application info
APP_INFO = Info("nakayama_ar", "Application information")
APP_INFO.info({"version": __version__})

# Triangle construction
TRIANGLES_BUILT = Counter(
    "nakayama_ar_triangles_total",
    "AR triangles constructed",
    ["algebra"],
)

STRIP_EVENTS = Counter(
    "nakayama_ar_strip_events_total",
    "Contractible summands stripped from triangle middles",
    ["algebra"],
)

TRIANGLE_SECONDS = Histogram(
    "nakayama_ar_triangle_seconds",
    "Time to construct one AR triangle",
    ["algebra"],
    buckets=[0.01, 0.05, 0.1, 0.5, 1.0, 5.0, 30.0],
)

# Decomposition
IDEMPOTENT_SPLITS = Counter(
    "nakayama_ar_idempotent_splits_total",
    "Complexes split along a lifted idempotent",
)

# Components
COMPONENT_CLASSES = Histogram(
    "nakayama_ar_component_classes",
    "Vertex classes modulo shift in knitted components",
    ["algebra"],
    buckets=[1, 2, 4, 8, 16, 32, 64, 128],
)


class MetricsExporter:
    """Exports metrics in Prometheus format."""

    @staticmethod
    def get_prometheus_format() -> tuple[str, bytes]:
        """Get metrics in Prometheus exposition format.

        Returns:
            Tuple of (content_type, metrics_body)
        """
        return CONTENT_TYPE_LATEST, generate_latest()

    @staticmethod
    def record_triangle(algebra: str, seconds: float, stripped: int) -> None:
        """Record one triangle construction.

        Args:
            algebra: Algebra label
            seconds: Wall time of the construction
            stripped: Number of contractible summands removed from the middle
        """
        TRIANGLES_BUILT.labels(algebra=algebra).inc()
        TRIANGLE_SECONDS.labels(algebra=algebra).observe(seconds)
        if stripped:
            STRIP_EVENTS.labels(algebra=algebra).inc(stripped)

    @staticmethod
    def record_component(algebra: str, classes: int) -> None:
        COMPONENT_CLASSES.labels(algebra=algebra).observe(classes)

    @staticmethod
    def write_textfile(path: str | Path) -> None:
        """Write the default registry in text exposition format."""
        write_to_textfile(str(path), REGISTRY)
