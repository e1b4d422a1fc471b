"""Laboratorio de conmutadores para iones atrapados: simulación, muestreo y estimación."""

__version__ = "1.0.0"
