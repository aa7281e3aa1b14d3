"""Tests the file loggers.
"""
import pytest

def test_null():
    """Tests that a logger without a root writes nothing.
    """
    from eisdet.logs import Logger
    logger = Logger(None, "nullcheck")
    logger.info("nothing %d", 1)
    logger.error("nothing")
    assert logger.root is None
    assert logger.handlers == []

def test_files(tmpdir):
    """Tests the three rotating log files.
    """
    from os import path
    from eisdet.logs import Logger
    logger = Logger(str(tmpdir), "filecheck")
    logger.info("verify %s: %s", "2.6", "pass")
    logger.warning("something odd")
    logger.debug("details")
    for suffix in ["debug.log", "log", "error.log"]:
        assert path.isfile(path.join(str(tmpdir), "logs",
                                     "filecheck.{}".format(suffix)))
    with open(path.join(str(tmpdir), "logs", "filecheck.log")) as f:
        contents = f.read()
    assert "verify 2.6: pass" in contents
    with open(path.join(str(tmpdir), "logs", "filecheck.error.log")) as f:
        contents = f.read()
    assert "something odd" in contents
    assert "verify 2.6" not in contents

def test_shared(tmpdir, monkeypatch):
    """Tests that loggers are shared per cache directory and identifier.
    """
    from eisdet.logs import get_logger
    monkeypatch.setenv("MODFORMS_CACHE_DIR", str(tmpdir))
    first = get_logger("sharedcheck")
    assert get_logger("sharedcheck") is first
    assert first.root is not None
    monkeypatch.delenv("MODFORMS_CACHE_DIR")
    assert get_logger("sharedcheck") is not first

def test_root_switch(tmpdir, monkeypatch):
    """Tests that changing the cache directory detaches the old files from
    the shared `logging.Logger`.
    """
    import logging
    from os import path
    from eisdet.logs import get_logger
    first_root = tmpdir.mkdir("first")
    second_root = tmpdir.mkdir("second")

    monkeypatch.setenv("MODFORMS_CACHE_DIR", str(first_root))
    first = get_logger("switchcheck")
    first.info("before %s", "switch")
    monkeypatch.setenv("MODFORMS_CACHE_DIR", str(second_root))
    second = get_logger("switchcheck")
    second.info("after %s", "switch")

    assert first.attached == []
    underlying = logging.getLogger("eisdet.switchcheck")
    assert set(underlying.handlers) == set(second.attached)
    assert len(underlying.handlers) == 3

    with open(path.join(str(first_root), "logs", "switchcheck.log")) as f:
        contents = f.read()
    assert "before switch" in contents
    assert "after switch" not in contents
    with open(path.join(str(second_root), "logs", "switchcheck.log")) as f:
        assert "after switch" in f.read()

    monkeypatch.delenv("MODFORMS_CACHE_DIR")
    third = get_logger("switchcheck")
    assert second.attached == []
    assert underlying.handlers == third.attached
    assert isinstance(third.attached[0], logging.NullHandler)
