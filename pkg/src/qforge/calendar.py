"""Trading calendars: strictly increasing sequences of daily dates."""

from __future__ import annotations

import datetime as dt
from typing import Iterable, Iterator


class TradingCalendar:
    """Immutable, strictly increasing sequence of trading dates."""

    __slots__ = ("dates", "_index")

    def __init__(self, dates: Iterable[dt.date]):
        ds = tuple(dates)
        if not ds:
            raise ValueError("calendar must be nonempty")
        for a, b in zip(ds, ds[1:]):
            if a >= b:
                raise ValueError(f"calendar dates must be strictly increasing: {a} >= {b}")
        self.dates = ds
        self._index = {d: i for i, d in enumerate(ds)}

    @classmethod
    def from_strings(cls, dates: Iterable[str]) -> "TradingCalendar":
        return cls(dt.date.fromisoformat(s) for s in dates)

    def __len__(self) -> int:
        return len(self.dates)

    def __iter__(self) -> Iterator[dt.date]:
        return iter(self.dates)

    def __contains__(self, d: dt.date) -> bool:
        return d in self._index

    def __getitem__(self, pos: int) -> dt.date:
        return self.dates[pos]

    def __eq__(self, other) -> bool:
        return isinstance(other, TradingCalendar) and self.dates == other.dates

    def __hash__(self) -> int:
        return hash(self.dates)

    def __repr__(self) -> str:
        return f"TradingCalendar({self.dates[0]}..{self.dates[-1]}, n={len(self.dates)})"

    def index(self, d: dt.date) -> int:
        """Position of an exact calendar date; KeyError if absent."""
        try:
            return self._index[d]
        except KeyError:
            raise KeyError(f"date {d} not in calendar") from None

    def positions_between(self, start: dt.date, end: dt.date) -> range:
        """Positions of all calendar dates in [start, end] (inclusive)."""
        if start > end:
            raise ValueError(f"empty date range: {start} > {end}")
        lo = 0
        while lo < len(self.dates) and self.dates[lo] < start:
            lo += 1
        hi = len(self.dates)
        while hi > lo and self.dates[hi - 1] > end:
            hi -= 1
        return range(lo, hi)


def weekday_calendar(n_days: int, start: dt.date = dt.date(2018, 1, 2)) -> TradingCalendar:
    """n_days consecutive weekdays starting at `start` (weekends skipped)."""
    if n_days < 1:
        raise ValueError("n_days must be >= 1")
    out = []
    d = start
    while len(out) < n_days:
        if d.weekday() < 5:
            out.append(d)
        d += dt.timedelta(days=1)
    return TradingCalendar(out)
