import pytest # noqa

import io
import logging

import lattice_spectra.debug as dbg


def test_logger_class(LOGGER):
    assert isinstance(LOGGER, dbg.SpectraLogger)
    assert isinstance(dbg._initialize_logger('lattice_spectra.test.plain', custom_logger=False), logging.Logger)


def test_live_debug(LOGGER):
    stream = io.StringIO()
    LOGGER.toggle_live_debug(logging.WARNING, stream)
    try:
        assert LOGGER.is_live_debugging()
        LOGGER.warning('cap reached')
        LOGGER.debug('hidden')
    finally:
        LOGGER.toggle_live_debug()
    assert not LOGGER.is_live_debugging()
    text = stream.getvalue()
    assert 'WARNING | cap reached: Function test_live_debug in test_debug.py' in text
    assert 'hidden' not in text


def test_enable_logging(LOGGER, tmp_path):
    path = tmp_path / 'spectra.log'
    path.write_text('stale')
    handler = dbg._enable_logging(LOGGER, filename=str(path))
    try:
        LOGGER.info('written')
    finally:
        LOGGER.removeHandler(handler)
        handler.close()
    text = path.read_text()
    assert 'stale' not in text
    assert 'lattice_spectra.test - INFO | written' in text


def test_enable_logging_plain_logger(tmp_path):
    with pytest.raises(TypeError):
        dbg._enable_logging(logging.getLogger('lattice_spectra_plain'), filename=str(tmp_path / 'x.log'))
