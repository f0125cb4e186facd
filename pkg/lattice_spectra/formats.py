"""Reading and writing the lattice JSON document

A document is a JSON object with a name, a list of element labels and exactly
one of "covers" (Hasse edges) or "leq" (the full order), each a list of
[lower, upper] label pairs.
"""

# Created:   18-Oct-2026

import json

import lattice_spectra.errors as errors
from lattice_spectra.core import build_from_covers, build_from_leq
from lattice_spectra.debug import _initialize_logger


_logger = _initialize_logger('lattice_spectra.formats')


def _pairs(document, key):
    pairs = document[key]
    if not isinstance(pairs, list):
        raise errors.LatticeFormatError('Key "{}" must be a list of [lower, upper] pairs'.format(key))
    for i, pair in enumerate(pairs):
        if not isinstance(pair, list) or len(pair) != 2 or not all(isinstance(label, str) for label in pair):
            raise errors.LatticeFormatError('Key "{}", entry {}: expected [lower, upper] labels, got {}'.format(key, i, json.dumps(pair)))
    return [tuple(pair) for pair in pairs]


def lattice_from_dict(document, default_name='L', max_size=None):
    """Builds a lattice from a parsed JSON document

    Raises
    ------
    LatticeFormatError
        Missing, extra or mistyped keys
    """

    if not isinstance(document, dict):
        raise errors.LatticeFormatError('Lattice document must be a JSON object')
    name = document.get('name', default_name)
    if not isinstance(name, str):
        raise errors.LatticeFormatError('Key "name" must be a string')
    if 'elements' not in document:
        raise errors.LatticeFormatError('Missing key "elements"')
    elements = document['elements']
    if not isinstance(elements, list) or not all(isinstance(label, str) for label in elements):
        raise errors.LatticeFormatError('Key "elements" must be a list of strings')

    present = [key for key in ('covers', 'leq') if key in document]
    if len(present) != 1:
        raise errors.LatticeFormatError('Exactly one of "covers" or "leq" is required, found {}'.format(present or 'neither'))
    unknown = sorted(set(document) - {'name', 'elements', 'covers', 'leq'})
    if unknown:
        raise errors.LatticeFormatError('Unknown key "{}"'.format(unknown[0]))

    key = present[0]
    build = build_from_covers if key == 'covers' else build_from_leq
    return build(elements, _pairs(document, key), name=name, max_size=max_size)


def parse_lattice(text, default_name='L', max_size=None):
    """Parses a JSON lattice document from a string

    Raises
    ------
    LatticeFormatError
        The text is not valid JSON (with line and column) or the document is malformed
    """

    try:
        document = json.loads(text)
    except json.JSONDecodeError as error:
        raise errors.LatticeFormatError('Invalid JSON at line {}, column {}: {}'.format(error.lineno, error.colno, error.msg)) from None
    return lattice_from_dict(document, default_name=default_name, max_size=max_size)


def load_lattice(path, max_size=None):
    """Reads a lattice document from a file, named after the file when the document has no name
    """

    _logger.debug('Loading lattice from {}'.format(path))
    with open(path, 'r', encoding='utf-8') as fp:
        text = fp.read()
    stem = str(path).replace('\\', '/').rsplit('/', 1)[-1].rsplit('.', 1)[0]
    return parse_lattice(text, default_name=stem, max_size=max_size)


def dump_lattice(lattice):
    """Serializes a lattice as a cover-list document, keys and covers in a stable order
    """

    return json.dumps(lattice.to_dict(), indent=2)
