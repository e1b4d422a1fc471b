"""
ADAPTADORES del Event Bus.

1. InMemoryEventBus  — para tests (guarda eventos en lista)
2. LoggingEventBus   — para la CLI (loguea eventos con sus datos)

El dominio y la application NO importan ninguno de estos.
Solo los conoce el Composition Root (container.py).
"""
import logging
from dataclasses import fields

from src.domain.shared.base import DomainEvent
from src.domain.shared.event_bus import EventBus

logger = logging.getLogger(__name__)

_ENVELOPE_FIELDS = {"event_id", "occurred_at"}


# ─────────────────────────────────────────────────────────────
# IN-MEMORY EVENT BUS (para tests)
# ─────────────────────────────────────────────────────────────
class InMemoryEventBus(EventBus):
    """
    Adaptador de test: almacena eventos en memoria.

    Uso en tests:
        bus = InMemoryEventBus()
        handler = ReproduceFigure1CommandHandler(repo, bus, runner)
        handler.handle(command)
        assert bus.get_events_of_type(FigureCompleted)
    """

    def __init__(self):
        self._published: list[DomainEvent] = []

    def publish(self, event: DomainEvent) -> None:
        self._published.append(event)
        logger.debug(f"[InMemoryEventBus] Event published: {event.__class__.__name__}")

    def publish_many(self, events: list[DomainEvent]) -> None:
        for event in events:
            self.publish(event)

    @property
    def published(self) -> list[DomainEvent]:
        return list(self._published)

    def get_events_of_type(self, event_type: type) -> list[DomainEvent]:
        """Filtra eventos por tipo para las assertions de los tests."""
        return [e for e in self._published if isinstance(e, event_type)]


# ─────────────────────────────────────────────────────────────
# LOGGING EVENT BUS (CLI)
# ─────────────────────────────────────────────────────────────
class LoggingEventBus(EventBus):
    """Loguea cada evento con sus campos de datos; no hace nada más."""

    def publish(self, event: DomainEvent) -> None:
        payload = ", ".join(
            f"{f.name}={getattr(event, f.name)!r}"
            for f in fields(event)
            if f.name not in _ENVELOPE_FIELDS
        )
        logger.info(f"[EVENT] {event.__class__.__name__} | {payload}")

    def publish_many(self, events: list[DomainEvent]) -> None:
        for event in events:
            self.publish(event)
