"""Dict-level wrappers over the compiled _core module.

Every function accepts and returns plain dicts in the same JSON formats the
vcm CLI reads and writes: complexes as {"vertices", "facets", "blocks"?},
ideals as {"vertices", "generators"}, certificates as
{"delta", "delta_prime", "psi", "order"?, "c"?}.
"""

import json

from . import _core

__all__ = [
    "check_cm",
    "betti",
    "sr_ideal",
    "saturate_by_irrelevant",
    "homology",
    "rel_homology_z",
    "find_shelling",
    "cover_verify",
    "vshelling_verify",
    "construct",
    "corollary_order",
    "link_decompose",
    "InvalidInput",
]

InvalidInput = _core.InvalidInput


def _roundtrip(raw):
    return json.loads(raw)


def check_cm(complex_doc, field="q"):
    return _roundtrip(_core.check_cm(json.dumps(complex_doc), field))


def betti(doc, field="q"):
    return _roundtrip(_core.betti(json.dumps(doc), field))


def sr_ideal(complex_doc):
    return _roundtrip(_core.sr_ideal(json.dumps(complex_doc)))


def saturate_by_irrelevant(ideal_doc):
    return _roundtrip(_core.saturate_by_irrelevant(json.dumps(ideal_doc)))


def homology(complex_doc, field="q"):
    return _roundtrip(_core.homology(json.dumps(complex_doc), field))


def rel_homology_z(complex_doc):
    return _roundtrip(_core.rel_homology_z(json.dumps(complex_doc)))


def find_shelling(complex_doc):
    return _roundtrip(_core.find_shelling(json.dumps(complex_doc)))


def cover_verify(cert_doc, field="q"):
    return _roundtrip(_core.cover_verify(json.dumps(cert_doc), field))


def vshelling_verify(cert_doc, field="q"):
    return _roundtrip(_core.vshelling_verify(json.dumps(cert_doc), field))


def construct(complex_doc, order):
    return _roundtrip(_core.construct(json.dumps(complex_doc), list(order)))


def corollary_order(complex_doc):
    return _roundtrip(_core.corollary_order(json.dumps(complex_doc)))


def link_decompose(cert_doc, vertex, field="q"):
    return _roundtrip(_core.link_decompose(json.dumps(cert_doc), vertex, field))
