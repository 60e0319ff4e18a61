"""Tests for the design and triples tools."""

import math

import pytest

from fourmode.errors import InvalidPairError
from fourmode.schemas import DesignInput, TriplesInput
from fourmode.tools.design import DesignTool
from fourmode.tools.triples import TriplesTool


class TestDesignTool:
    """Test the DesignTool class."""

    @pytest.fixture
    def design_tool(self):
        """Create a DesignTool instance."""
        return DesignTool()

    def test_design_from_pair(self, design_tool):
        result = design_tool.design(DesignInput(p=3, q=1, tau=1.0))

        c = result.couplings
        assert c.as_tuple() == pytest.approx(
            (math.pi / 2 * math.sqrt(10), math.pi / 2 * 6 / math.sqrt(10),
             math.pi / 2 * 8 / math.sqrt(10), 0.0),
            abs=1e-12,
        )
        assert result.triple.as_tuple() == (4, 3, 5)
        assert result.tau == 1.0
        assert result.omega == pytest.approx(math.pi)
        assert result.vL == pytest.approx(math.pi / 2)
        assert result.vR == pytest.approx(3 * math.pi / 2)
        assert result.fidelity >= 1 - 1e-12

    @pytest.mark.parametrize(
        "triple,pair",
        [((3, 4, 5), (3, 1)), ((4, 3, 5), (3, 1)), ((5, 12, 13), (5, 1)), ((8, 15, 17), (5, 3))],
    )
    def test_design_from_triple(self, design_tool, triple, pair):
        result = design_tool.design(DesignInput(triple=triple, tau=0.7))

        assert (result.pair.p, result.pair.q) == pair
        assert sorted(result.triple.as_tuple()) == sorted(triple)
        assert result.fidelity >= 1 - 1e-12

    def test_couplings_in_triple_ratio(self, design_tool):
        result = design_tool.design(DesignInput(p=5, q=3, tau=2.0))

        c = result.couplings
        assert c.v12 / c.v23 == pytest.approx(17 / 15)
        assert c.v12 / c.v34 == pytest.approx(17 / 8)

    def test_invalid_pair(self, design_tool):
        with pytest.raises(InvalidPairError, match="p,q must be odd and coprime"):
            design_tool.design(DesignInput(p=4, q=2, tau=1.0))

    @pytest.mark.parametrize("triple", [(6, 8, 10), (1, 2, 3)])
    def test_invalid_triple(self, design_tool, triple):
        with pytest.raises(InvalidPairError):
            design_tool.design(DesignInput(triple=triple, tau=1.0))

    def test_input_needs_exactly_one_source(self):
        with pytest.raises(ValueError):
            DesignInput(p=3, q=1, triple=(3, 4, 5), tau=1.0)
        with pytest.raises(ValueError):
            DesignInput(tau=1.0)
        with pytest.raises(ValueError):
            DesignInput(p=3, tau=1.0)


class TestTriplesTool:
    """Test the TriplesTool class."""

    def test_up_to_25(self):
        result = TriplesTool().list_triples(TriplesInput(c_max=25))

        assert result.count == 4
        assert [t.c for t in result.triples] == [5, 13, 17, 25]

    def test_empty(self):
        result = TriplesTool().list_triples(TriplesInput(c_max=4))

        assert result.count == 0
        assert result.triples == []
