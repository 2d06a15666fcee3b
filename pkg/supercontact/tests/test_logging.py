import logging

import pytest

from supercontact import logging as supercontact_logging


@pytest.fixture(autouse=True)
def restore_root_logger():
    root = logging.getLogger()
    level = root.level
    yield
    supercontact_logging.configure(silent=True)
    root.removeHandler(supercontact_logging._installed_handlers[0])
    supercontact_logging._installed_handlers.clear()
    root.setLevel(level)


def test_log_file(tmp_path):
    log_path = tmp_path / 'supercontact.log'
    supercontact_logging.configure(log_path=str(log_path), silent=True)
    logging.getLogger().info('Check spo.jacobi passed in 3 ms.')

    assert log_path.read_text().rstrip().endswith('Check spo.jacobi passed in 3 ms.')
    assert log_path.read_text().startswith('[INFO][')


def test_reconfigure_replaces_handlers(tmp_path):
    supercontact_logging.configure(log_path=str(tmp_path / 'a.log'))
    supercontact_logging.configure(log_path=str(tmp_path / 'b.log'), silent=True)

    handlers = supercontact_logging._installed_handlers
    assert len(handlers) == 1
    assert isinstance(handlers[0], logging.FileHandler)
    assert handlers[0].baseFilename.endswith('b.log')


def test_silent_without_file_installs_null_handler():
    supercontact_logging.configure(silent=True)
    assert [type(h) for h in supercontact_logging._installed_handlers] == [
        logging.NullHandler
    ]


@pytest.mark.parametrize('debug,level', [(False, logging.INFO), (True, logging.DEBUG)])
def test_level(debug, level):
    supercontact_logging.configure(silent=True, debug=debug)
    assert logging.getLogger().level == level
