import pytest

from iwalink import catalog
from iwalink.errors import InvalidCertificate, Unsupported
from iwalink.expr import parse_poly
from iwalink.greenberg import (
    CALLER_ASSERTED,
    Factor,
    FactorizationCertificate,
    Verdict,
    pseudonull,
    pseudonull_criterion,
    structured_factor,
)
from iwalink.laurent import MultiLaurent

T1 = MultiLaurent.var(0, 2)
T2 = MultiLaurent.var(1, 2)


def test_structured_factor_figure1():
    cert = structured_factor(catalog.figure1_link(12).delta)
    labels = {f.label: f.multiplicity for f in cert.factors}
    assert labels == {"t1-1": 1, "t2-1": 3}
    assert cert.integer_content == ((2, 2), (3, 1))
    assert cert.verify()


def test_structured_factor_cyclotomic_in_u():
    cert = structured_factor(catalog.conway_two_bridge(9, 2).delta)
    labels = {f.label for f in cert.factors}
    assert {"Phi_3(u)", "Phi_9(u)"} <= labels
    assert cert.verify()


def test_unit_shift_is_ignored():
    delta = catalog.figure1_link(1).delta * T1 ** -3 * T2 ** 2
    assert pseudonull(delta).verdict is Verdict.PSEUDONULL


def test_inconclusive_has_witness():
    v = pseudonull(catalog.conway_two_bridge(6, 1).delta)
    assert v.verdict is Verdict.INCONCLUSIVE
    assert v.witness.label == "Phi_6(u)"
    # the torus link T(2,4) has the factor 1 + t1 t2 = Phi_2(u), value 2 at (1,1)
    assert pseudonull(catalog.torus_link(2).delta).verdict is Verdict.PSEUDONULL
    assert pseudonull(catalog.c4_link().delta).verdict is Verdict.PSEUDONULL


def test_knots_are_never_pseudonull():
    for src in ("1", "t^2-t+1", "t^4-3*t^2+1"):
        assert pseudonull(parse_poly(src, 1)).verdict is Verdict.NOT_PSEUDONULL_KNOT


def test_unsupported_shape():
    with pytest.raises(Unsupported):
        structured_factor(T1 ** 2 + T2)
    with pytest.raises(Unsupported):
        structured_factor(MultiLaurent(2))


def test_caller_asserted_certificate():
    g = T1 ** 2 + T2
    delta = (T1 - 1) * g
    cert = FactorizationCertificate(
        2, (Factor(T1 - 1, 1), Factor(g, 1, CALLER_ASSERTED, "g")), (), delta
    )
    v = pseudonull_criterion(cert)
    assert v.verdict is Verdict.PSEUDONULL and v.caller_asserted
    h = T1 * T2 ** 2 - T1 + 1
    cert = FactorizationCertificate(2, (Factor(h, 1, CALLER_ASSERTED, "h"),), (), h)
    v = pseudonull_criterion(cert)
    assert v.verdict is Verdict.INCONCLUSIVE and v.witness.label == "h"


def test_invalid_certificate():
    cert = FactorizationCertificate(2, (Factor(T1 - 1, 2),), (), T1 - 1)
    with pytest.raises(InvalidCertificate):
        pseudonull_criterion(cert)
