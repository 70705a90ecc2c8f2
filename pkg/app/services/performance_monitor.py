# app/services/performance_monitor.py

import logging
import statistics
import threading
import time
from typing import Callable, Dict, List

from app.core.exception import InvalidRepeats

logger = logging.getLogger("fasthaar.monitor")


class PerformanceMonitor:
    """
    Wall-clock timing for the benchmark command.
    Informative only: nothing asserts on these numbers.
    """

    # One measurement at a time per process.
    _lock = threading.Lock()

    # Structure: { "fast analysis n=65536": [0.0012, 0.0011, ...] }
    _samples: Dict[str, List[float]] = {}

    @classmethod
    def measure(cls, fn: Callable[[], object], repeats: int, label: str = "") -> float:
        """Runs fn `repeats` times and returns the median duration in seconds."""
        if repeats < 1:
            raise InvalidRepeats(f"repeats must be >= 1, got {repeats}")

        with cls._lock:
            durations = []
            for _ in range(repeats):
                start = time.perf_counter()
                fn()
                durations.append(time.perf_counter() - start)
            if label:
                cls._samples[label] = durations

        median = statistics.median(durations)
        logger.info("⏱️ %s median %.6fs over %d runs", label or "measurement", median, repeats)
        return median

    @classmethod
    def snapshot(cls) -> Dict[str, List[float]]:
        with cls._lock:
            return {label: list(values) for label, values in cls._samples.items()}

    @classmethod
    def reset(cls) -> None:
        with cls._lock:
            cls._samples.clear()
