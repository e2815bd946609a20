"""Append-only broadcast stream shared between a producer and its consumers."""

from __future__ import annotations

import threading
from typing import Generic, Iterator, TypeVar

T = TypeVar("T")


class Stream(Generic[T]):
    """Every consumer sees every item in publication order.

    Items are kept for the lifetime of the stream, so a consumer that
    starts late still reads from the beginning.
    """

    def __init__(self, name: str = ""):
        self.name = name
        self._items: list[T] = []
        self._closed = False
        self._error: BaseException | None = None
        self._cond = threading.Condition()

    def put(self, item: T) -> None:
        with self._cond:
            if self._closed:
                raise RuntimeError(f"stream {self.name} is closed")
            self._items.append(item)
            self._cond.notify_all()

    def close(self) -> None:
        with self._cond:
            self._closed = True
            self._cond.notify_all()

    def fail(self, error: BaseException) -> None:
        with self._cond:
            if self._error is None:
                self._error = error
            self._closed = True
            self._cond.notify_all()

    @property
    def closed(self) -> bool:
        return self._closed

    def __iter__(self) -> Iterator[T]:
        index = 0
        while True:
            with self._cond:
                while index >= len(self._items) and not self._closed and self._error is None:
                    self._cond.wait()
                if self._error is not None:
                    raise self._error
                if index >= len(self._items):
                    return
                item = self._items[index]
            index += 1
            yield item

    def snapshot(self) -> list[T]:
        with self._cond:
            return list(self._items)
