from contextlib import contextmanager
from typing import Callable

from blinker import Signal

from . import CheckResult


def emit(result: CheckResult):
    _sig_check_finished.send(result=result)


@contextmanager
def subscribed(callback: Callable[[CheckResult], None]):
    with _sig_check_finished.connected_to(lambda _, result: callback(result)):
        yield


_sig_check_finished = Signal()
