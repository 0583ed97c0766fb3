"""
Timing statistics for solver runs.

reference
- https://github.com/facebookresearch/detr/blob/main/util/misc.py
"""

import time
import datetime
from collections import defaultdict, deque

import numpy as np

from .console import get_console


class SmoothedValue(object):
    """Track a series of values and provide access to smoothed values over a
    window or the global series average.
    """

    def __init__(self, window_size=20, fmt="{median:.4f} ({global_avg:.4f})"):
        self.fmt = fmt
        self.deque = deque(maxlen=window_size)
        self.total = 0.0
        self.count = 0

    def update(self, value, n=1):
        self.deque.append(value)
        self.count += n
        self.total += value * n

    @property
    def median(self):
        return float(np.median(np.asarray(self.deque, dtype=np.float64)))

    @property
    def avg(self):
        return float(np.mean(np.asarray(self.deque, dtype=np.float64)))

    @property
    def global_avg(self):
        return self.total / self.count

    @property
    def max(self):
        return max(self.deque)

    @property
    def value(self):
        return self.deque[-1]

    def __str__(self):
        return self.fmt.format(
            median=self.median,
            avg=self.avg,
            global_avg=self.global_avg,
            max=self.max,
            value=self.value)


class MetricLogger(object):
    def __init__(self, iterable=(), print_freq=100, header='', delimiter="  ", console=None):
        self.meters = defaultdict(SmoothedValue)
        self.iterable = iterable
        self.header = header
        self.print_freq = print_freq
        self.delimiter = delimiter
        self.console = console if console is not None else get_console(stderr=True)

    def update(self, **kwargs):
        for k, v in kwargs.items():
            assert isinstance(v, (float, int))
            self.meters[k].update(v)

    def __getattr__(self, attr):
        if attr in self.meters:
            return self.meters[attr]
        if attr in self.__dict__:
            return self.__dict__[attr]
        raise AttributeError("'{}' object has no attribute '{}'".format(
            type(self).__name__, attr))

    def __str__(self):
        return self.delimiter.join(f'{name}: {meter}' for name, meter in self.meters.items())

    def add_meter(self, name, meter):
        self.meters[name] = meter

    def timed(self, name, fn, *args, **kwargs):
        """Call ``fn`` and record its wall time (seconds) under ``name``."""
        t = time.perf_counter()
        out = fn(*args, **kwargs)
        self.update(**{name: time.perf_counter() - t})
        return out

    def log(self, *parts):
        self.console.print(self.delimiter.join(str(p) for p in parts), markup=False, highlight=False)

    def log_every(self):
        i = 0
        total = len(self.iterable)
        t = time.time()
        iter_time = SmoothedValue(window_size=100, fmt='{avg:.4f}')

        for obj in self.iterable:
            yield obj
            iter_time.update(time.time() - t)
            t = time.time()
            i += 1

            if i == 1 or i % self.print_freq == 0 or i == total:
                eta_seconds = iter_time.global_avg * (total - i)
                self.log(self.header,
                         f"[{i:>{len(str(total))}}/{total}]",
                         f"eta: {datetime.timedelta(seconds=int(eta_seconds))}",
                         str(self))

        if total:
            total_time = datetime.timedelta(seconds=int(iter_time.total))
            self.log(f'{self.header} Total time: {total_time} ({iter_time.total / total:.4f} s / it)')
