"""Buffered run event logger for ProdLab."""

from __future__ import annotations

from datetime import datetime
from pathlib import Path


class RunLogger:
    """Buffers experiment events in memory and flushes to disk in batches.

    Log format: YYYY-MM-DD HH:MM:SS LEVEL [scope] message

    Events are queued via info/warning/error. Auto-flushes when the buffer
    reaches buffer_size; the service flushes at the end of every run. With
    no log_path the events stay in memory (useful for dry runs and tests).
    """

    def __init__(self, log_path: Path | None = None, buffer_size: int = 50):
        self.log_path = log_path
        self._buffer: list[str] = []
        self._buffer_size = buffer_size
        self.history: list[str] = []

    def _enqueue(self, level: str, message: str, scope: str | None = None) -> None:
        now = datetime.now().strftime("%Y-%m-%d %H:%M:%S")
        if scope:
            line = f"{now} {level} [{scope}] {message}"
        else:
            line = f"{now} {level} {message}"
        self._buffer.append(line)
        self.history.append(line)
        if len(self._buffer) >= self._buffer_size:
            self.flush()

    def info(self, message: str, scope: str | None = None) -> None:
        self._enqueue("INFO", message, scope)

    def warning(self, message: str, scope: str | None = None) -> None:
        self._enqueue("WARNING", message, scope)

    def error(self, message: str, scope: str | None = None) -> None:
        self._enqueue("ERROR", message, scope)

    def flush(self) -> None:
        """Write all buffered events to disk in one operation."""
        if not self._buffer or self.log_path is None:
            return
        self.log_path.parent.mkdir(parents=True, exist_ok=True)
        with open(self.log_path, "a") as f:
            f.write("\n".join(self._buffer) + "\n")
        self._buffer.clear()

    def __del__(self) -> None:
        try:
            self.flush()
        except Exception:  # nosec B110
            pass

    def warnings(self) -> list[str]:
        """Warning and error events recorded by this logger."""
        return [
            line for line in self.history if " WARNING " in line or " ERROR " in line
        ]
