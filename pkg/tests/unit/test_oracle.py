"""
Unit tests for certificates and the brute-force oracle
"""

from fractions import Fraction
from itertools import combinations

import pytest

from upex import (
    CapExceededError,
    CapReason,
    Certificate,
    CertificateReason,
    GeneratorConfig,
    MalformedCertificateError,
    OracleConfig,
    Point,
    UpeInstance,
    brute_force_decide,
    check_certificate,
    generate_instance,
    verify_drawing,
)
from upex.oracle import crossing_edges, materialize_drawing, spread

# bottom to top: s, a with (s, b) crossing, b with (a, t) crossing, t
DIAMOND_LINES = [
    ([0], [0]),
    ([1], [1, (0, 2)]),
    ([2], [(1, 3), 2]),
    ([3], [3]),
]


class TestCertificate:
    """Test the certificate container"""

    def test_from_lines(self):
        """Lines become labels and orders"""
        cert = Certificate.from_lines(DIAMOND_LINES)
        assert cert.class_count == 4
        assert cert.classes() == [[0], [1], [2], [3]]
        assert cert.sigma[2] == (1, (0, 2))

    def test_json(self):
        """Edges travel as lists and come back as tuples"""
        cert = Certificate.from_lines(DIAMOND_LINES)
        doc = cert.to_json()
        assert doc["sigma"]["2"] == [1, [0, 2]]
        assert Certificate.from_json(doc) == cert

    def test_bad_json(self):
        """Unreadable documents are malformed certificates"""
        with pytest.raises(MalformedCertificateError) as exc_info:
            Certificate.from_json({"sigma": {}})
        assert exc_info.value.reason == CertificateReason.BAD_SIGMA

    def test_crossing_edges(self, diamond_instance):
        """Edges with endpoints strictly on both sides"""
        cert = Certificate.from_lines(DIAMOND_LINES)
        assert crossing_edges(diamond_instance({}), cert.y_assignment, 2) == [(0, 2)]


class TestCheckCertificate:
    """Test the local checks"""

    def test_diamond_passes(self, diamond_instance):
        """A consistent certificate passes, embedding included"""
        cert = Certificate.from_lines(DIAMOND_LINES)
        assert check_certificate(diamond_instance({}, embedded=False), cert).passed
        assert check_certificate(diamond_instance({}, left=1), cert).passed

    def test_wrong_embedding(self, diamond_instance):
        """The successor order on the line above must follow the lists"""
        result = check_certificate(diamond_instance({}, left=2), Certificate.from_lines(DIAMOND_LINES))
        assert not result.passed
        assert result.failed_check == 8

    def test_downward_edge(self):
        """Check 1: edges go up"""
        inst = UpeInstance.build(2, [(0, 1)])
        result = check_certificate(inst, Certificate.from_lines([([1], [1]), ([0], [0])]))
        assert result.failed_check == 1
        assert result.elements == ((0, 1),)

    def test_edges_swap(self, diamond_instance):
        """Check 2: spanning edges keep their order"""
        lines = [([0], [0]), ([1], [(0, 2), 1]), ([2], [(1, 3), 2]), ([3], [3])]
        result = check_certificate(diamond_instance({}, embedded=False), Certificate.from_lines(lines))
        assert result.failed_check == 2

    def test_pins_stacked_wrong(self):
        """Check 3: lower classes have lower pins"""
        inst = UpeInstance.build(2, [], positions={0: (0, 5), 1: (0, 1)})
        result = check_certificate(inst, Certificate.from_lines([([0], [0]), ([1], [1])]))
        assert result.failed_check == 3

    def test_class_pins_differ(self):
        """Check 4: one class, one pinned y"""
        inst = UpeInstance.build(2, [], positions={0: (0, 0), 1: (1, 1)})
        result = check_certificate(inst, Certificate.from_lines([([0, 1], [0, 1])]))
        assert result.failed_check == 4

    def test_class_pins_out_of_order(self):
        """Check 5: pins of a line appear by x"""
        inst = UpeInstance.build(2, [], positions={0: (1, 0), 1: (0, 0)})
        result = check_certificate(inst, Certificate.from_lines([([0, 1], [0, 1])]))
        assert result.failed_check == 5
        assert check_certificate(inst, Certificate.from_lines([([0, 1], [1, 0])])).passed

    def test_partial_edge_side(self):
        """Check 6: an H-edge sits on its geometric side of a pin"""
        inst = UpeInstance.build(
            3, [(0, 1)],
            positions={0: (0, 0), 1: (0, 2), 2: (1, 1)},
            routes={(0, 1): []},
        )
        wrong = Certificate.from_lines([([0], [0]), ([2], [2, (0, 1)]), ([1], [1])])
        right = Certificate.from_lines([([0], [0]), ([2], [(0, 1), 2]), ([1], [1])])
        assert check_certificate(inst, wrong).failed_check == 6
        assert check_certificate(inst, right).passed

    def test_result_to_dict(self):
        """Failures report their elements as lists"""
        inst = UpeInstance.build(2, [(0, 1)])
        doc = check_certificate(inst, Certificate.from_lines([([1], [1]), ([0], [0])])).to_dict()
        assert doc == {"passed": False, "failed_check": 1, "detail": doc["detail"], "elements": [[0, 1]]}

    @pytest.mark.parametrize("y, sigma, reason", [
        ({0: 1}, {1: (0,)}, CertificateReason.MISSING_VERTEX),
        ({0: 1, 1: 2, 7: 3}, {1: (0,), 2: (1,), 3: (7,)}, CertificateReason.UNKNOWN_VERTEX),
        ({0: 1, 1: 3}, {1: (0,), 3: (1,)}, CertificateReason.EMPTY_CLASS),
        ({0: 1, 1: 2}, {1: (0,), 2: ()}, CertificateReason.BAD_SIGMA),
        ({0: 1, 1: 2}, {1: (0,), 2: (1,), 5: ()}, CertificateReason.BAD_SIGMA),
    ])
    def test_malformed(self, y, sigma, reason):
        """Certificates must describe exactly the instance"""
        inst = UpeInstance.build(2, [(0, 1)])
        with pytest.raises(MalformedCertificateError) as exc_info:
            check_certificate(inst, Certificate(y, sigma))
        assert exc_info.value.reason == reason


class TestMaterialize:
    """Test drawings built along certificate lines"""

    def test_spread(self):
        """Gaps are filled evenly, ends step by one"""
        values = [None, Fraction(2), None, None, Fraction(5), None]
        assert spread(values) == [1, 2, 3, 4, 5, 6]
        assert spread([None, None]) == [1, 2]

    def test_free_path(self):
        """Unpinned classes get consecutive lines"""
        inst = UpeInstance.build(2, [(0, 1)])
        d = materialize_drawing(inst, [((0,), (0,)), ((1,), (1,))])
        assert d.vertex_pos == {0: Point.of(1, 1), 1: Point.of(1, 2)}
        assert verify_drawing(inst, d)

    def test_crossing_points(self, diamond_instance):
        """Edges pass through their points on crossed lines"""
        inst = diamond_instance({}, embedded=False)
        d = materialize_drawing(inst, [tuple(map(tuple, line)) for line in DIAMOND_LINES])
        assert len(d.edge_routes[(0, 2)]) == 3
        assert verify_drawing(inst, d)


class TestBruteForce:
    """Test the oracle's decisions"""

    def test_cap(self, diamond_instance):
        """Instances above the cap are refused"""
        with pytest.raises(CapExceededError) as exc_info:
            brute_force_decide(diamond_instance({}), OracleConfig(max_vertices=3))
        assert exc_info.value.reason == CapReason.ORACLE_VERTICES

    def test_yes_with_witnesses(self, diamond_instance, diamond_embedding, oracle_config):
        """A YES carries a passing certificate and a verified drawing"""
        inst = diamond_instance({1: (0, 1), 2: (1, 1)}, left=1)
        decision = brute_force_decide(inst, oracle_config)
        assert decision.answer
        assert check_certificate(inst, decision.certificate).passed
        assert verify_drawing(inst, decision.drawing)
        assert decision.embedding == diamond_embedding(1)

    def test_embedding_against_pins(self, diamond_instance, oracle_config):
        """Pins left to right contradict the mirrored embedding"""
        inst = diamond_instance({1: (0, 1), 2: (1, 1)}, left=2)
        assert not brute_force_decide(inst, oracle_config).answer

    def test_free_embedding_follows_pins(self, diamond_instance, diamond_embedding, oracle_config):
        """Without an embedding the oracle reports the one it drew"""
        inst = diamond_instance({1: (0, 1), 2: (1, 1)}, embedded=False)
        decision = brute_force_decide(inst, oracle_config)
        assert decision.answer
        assert decision.embedding == diamond_embedding(1)

    def test_pins_against_paths(self, diamond_instance, oracle_config):
        """A source pinned above its sink has no extension"""
        inst = diamond_instance({0: (0, 5), 3: (0, 1)})
        assert not brute_force_decide(inst, oracle_config)

    def test_directed_cycle(self, oracle_config):
        """Directed cycles never draw upward"""
        inst = UpeInstance.build(3, [(0, 1), (1, 2), (2, 0)])
        assert not brute_force_decide(inst, oracle_config).answer

    def test_bent_edge(self, oracle_config):
        """Bends are searched as pins and the route survives"""
        inst = UpeInstance.build(
            2, [(0, 1)],
            positions={0: (0, 0), 1: (0, 2)},
            routes={(0, 1): [(0, 0), (1, 1), (0, 2)]},
        )
        decision = brute_force_decide(inst, oracle_config)
        assert decision.answer
        assert decision.certificate == Certificate.from_lines([([0], [0]), ([1], [1])])
        assert decision.drawing.edge_routes[(0, 1)] == inst.drawing.edge_routes[(0, 1)]

    def test_no_materialize(self, diamond_instance):
        """The drawing can be skipped"""
        decision = brute_force_decide(diamond_instance({}), OracleConfig(materialize=False))
        assert decision.answer
        assert decision.drawing is None
        assert decision.certificate is not None


class TestMonotonicity:
    """Test that fewer pins never turn YES into NO"""

    @pytest.mark.parametrize("kind", ["st", "path", "cycle"])
    def test_dropping_pins(self, kind):
        """Every subset of the pins of a YES instance is YES"""
        config = OracleConfig(max_vertices=6, materialize=False)
        yes = 0
        for seed in range(12):
            inst = generate_instance(GeneratorConfig(kind=kind, n=5, seed=seed, pin_fraction=0.8, adversarial=seed % 2 == 1))
            if not brute_force_decide(inst, config).answer:
                continue
            yes += 1
            pinned = sorted(inst.partial_vertices)
            for k in range(len(pinned)):
                for keep in combinations(pinned, k):
                    assert brute_force_decide(inst.restricted_pins(keep), config).answer, keep
        assert yes >= 3

    def test_no_can_become_yes(self, diamond_instance, oracle_config):
        """Dropping a conflicting pin can turn NO into YES"""
        inst = diamond_instance({0: (0, 5), 3: (0, 1)})
        assert not brute_force_decide(inst, oracle_config).answer
        assert brute_force_decide(inst.restricted_pins([0]), oracle_config).answer

    def test_restricted_pins(self, diamond_instance):
        """Only kept pinned vertices survive, without H-edges"""
        inst = diamond_instance({0: (0, 0), 1: (-1, 1)}, routes={(0, 1): [(0, 0), (-1, 1)]})
        reduced = inst.restricted_pins([1, 2])
        assert reduced.partial_vertices == frozenset({1})
        assert not reduced.partial_edges
        assert reduced.drawing.vertex_pos == {1: inst.drawing.vertex_pos[1]}
