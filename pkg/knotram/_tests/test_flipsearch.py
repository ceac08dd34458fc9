import pytest

from knotram.executors.flipsearch import (
    FlipWitness,
    find_flips,
    localize,
    search,
    validate_hypotheses,
)


class TestHypotheses:
    @staticmethod
    @pytest.mark.parametrize("t,p,q", [(29, 3, 5), (29, 5, 3), (89, 3, 5)])
    def test_valid(t, p, q):
        assert validate_hypotheses(t, p, q) == []

    @staticmethod
    def test_pq_does_not_divide():
        violations = validate_hypotheses(29, 3, 7)
        assert "21 does not divide (t+1)/2 = 15" in violations
        assert "t=29 is not -1 mod 21" in violations

    @staticmethod
    @pytest.mark.parametrize(
        "t,p,q",
        [(28, 3, 5), (29, 3, 3), (29, 2, 5), (29, 15, 1), (59, 5, 5)],
    )
    def test_invalid(t, p, q):
        assert len(validate_hypotheses(t, p, q)) > 0

    @staticmethod
    def test_search_raises():
        with pytest.raises(ValueError, match="does not divide"):
            search(29, 3, 7)


class TestFindFlips:
    @staticmethod
    def test_t29():
        result = find_flips(29, 3, 5)
        assert [x["n"] for x in result.chain] == [45, 225, 1125, 5625]
        assert [x["sign"] for x in result.chain] == [-1, -1, 1, -1]
        assert all(x["u"] == 2 for x in result.chain)
        pairs = [(w.n_prev, w.n_next) for w in result.witnesses]
        assert pairs == [(45, 1125), (1125, 5625)]
        assert not result.budget_exhausted

    @staticmethod
    def test_single_flip():
        result = find_flips(29, 3, 5, max_flips=1)
        assert [x["n"] for x in result.chain] == [45, 225, 1125]
        witness = result.witnesses[0]
        assert (witness.sign_prev, witness.sign_next) == (-1, 1)

    @staticmethod
    def test_exhausted():
        result = find_flips(29, 3, 5, max_flips=1, exponent_cap=2)
        assert result.witnesses == []
        assert [x["n"] for x in result.chain] == [45, 225]
        assert result.budget_exhausted


class TestFlipWitness:
    @staticmethod
    @pytest.mark.parametrize(
        "n_prev,n_next,sign_prev,sign_next",
        [
            (45, 225, -1, -1),
            (1125, 5625, 1, 1),
            (45, 1000, -1, 1),
            (0, 45, -1, 1),
            (45, 1125, 0, 1),
        ],
    )
    def test_invalid(n_prev, n_next, sign_prev, sign_next):
        with pytest.raises(ValueError):
            FlipWitness(n_prev, n_next, sign_prev, sign_next)

    @staticmethod
    def test_round_trip():
        witness = FlipWitness(45, 1125, -1, 1)
        restored = FlipWitness.from_dict(witness.as_dict())
        assert (restored.n_prev, restored.n_next) == (45, 1125)
        assert (restored.sign_prev, restored.sign_next) == (-1, 1)


class TestLocalize:
    @staticmethod
    def test_first_flip(Budget):
        witness = FlipWitness(
            n_prev=45, n_next=1125, sign_prev=-1, sign_next=1
        )
        localize(29, 3, 5, witness, budget=Budget)
        assert [x["d"] for x in witness.localized] == [
            25,
            75,
            125,
            225,
            375,
            1125,
        ]
        assert all(x["norm_mod_pq"] == 1 for x in witness.localized)
        negative = [x["d"] for x in witness.localized if x["norm_sign"] < 0]
        assert negative == [25, 225, 1125]
        assert witness.candidates == [25, 75, 225, 1125]

        by_d = {x["d"]: x for x in witness.localized}
        assert by_d[25]["ramified"] == [90636599549]
        assert by_d[75]["ramified"] == [2699, 15299]
        assert by_d[75]["status"] == "not_candidate"
        assert by_d[1125]["ramified"] is None

    @staticmethod
    def test_indeterminate_without_norm():
        witness = FlipWitness(
            n_prev=45, n_next=1125, sign_prev=-1, sign_next=1
        )
        localize(29, 3, 5, witness, digit_cap=1, certify_digits=0)
        assert [x["d"] for x in witness.localized] == [
            25,
            75,
            125,
            225,
            375,
            1125,
        ]
        assert all(x["status"] == "indeterminate" for x in witness.localized)
        assert all(x["norm_sign"] is None for x in witness.localized)
        assert witness.candidates == []

    @staticmethod
    def test_record(Budget):
        witness = FlipWitness(
            n_prev=45, n_next=1125, sign_prev=-1, sign_next=1
        )
        localize(29, 3, 5, witness, certify_digits=12, budget=Budget)
        record = witness.to_record()
        entry = record["localized"][0]
        assert entry["d"] == 25
        assert entry["ramified"] == ["90636599549"]
        assert record["candidates"] == [25, 225, 1125]

    @staticmethod
    @pytest.mark.slow
    def test_wide_flip(Budget):
        witness = FlipWitness(
            n_prev=45, n_next=28125, sign_prev=-1, sign_next=1
        )
        localize(29, 3, 5, witness, certify_digits=0, budget=Budget)
        assert len(witness.localized) == 12
        negative = [x["d"] for x in witness.localized if x["norm_sign"] < 0]
        assert negative == [25, 225, 1125, 3125, 5625]
        assert set(negative) <= set(witness.candidates)


class TestSearch:
    @staticmethod
    def test_t29(Budget):
        result = search(29, 3, 5, certify_digits=0, budget=Budget)
        assert len(result.witnesses) == 2
        first, second = result.witnesses
        assert first.candidates == [25, 225, 1125]
        assert [x["d"] for x in second.localized][0] == 625
        record = result.to_record()
        assert record["budget_exhausted"] is False
        assert record["chain"][0] == {"n": 45, "u": 2, "v": 1, "sign": -1}
