import pytest

import numpy as np

import lattice_spectra.core as core
import lattice_spectra.debug as dbg
import lattice_spectra.gen as gen
from lattice_spectra.renderer import Renderer
from lattice_spectra.theorems import LatticeContext


@pytest.fixture
def LOGGER():
    return dbg._initialize_logger('lattice_spectra.test')


@pytest.fixture
def CATALOG():

    def _CATALOG(name):
        return gen.get_catalog_entry(name).lattice

    return _CATALOG


@pytest.fixture
def LATTICE():

    def _LATTICE(names, covers, name='L'):
        return core.build_from_covers(names, covers, name=name)

    return _LATTICE


@pytest.fixture
def KITE(CATALOG):
    return CATALOG('K5')


@pytest.fixture
def POSET():

    def _POSET(k, relations):
        lt = np.zeros((k, k), dtype=bool)
        for lower, upper in relations:
            lt[lower, upper] = True
        return gen.PosetSpec(lt)

    return _POSET


@pytest.fixture
def CONTEXT(CATALOG):

    def _CONTEXT(name, options=None):
        return LatticeContext(CATALOG(name), options)

    return _CONTEXT


@pytest.fixture
def RENDERER():

    def _RENDERER(stream, json_mode=False, quiet=False):
        return Renderer(json_mode=json_mode, quiet=quiet, stream=stream)

    return _RENDERER


@pytest.fixture(scope='session')
def SMALL_DISTRIBUTIVE():
    return list(gen.enumerate_distributive(6))


@pytest.fixture(scope='session')
def DISTRIBUTIVE_UP_TO_8():
    return list(gen.enumerate_distributive(8))
