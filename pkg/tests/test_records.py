import pytest

from attnscope import AlignmentRecord, AttentionMatrix, Dataset, validate_record

from conftest import make_record


def identity(n):
    return AttentionMatrix.from_rows(
        [[1.0 if i == j else 0.0 for i in range(n)] for j in range(n)]
    )


class TestAttentionMatrix:
    def test_shape_accessors(self):
        m = AttentionMatrix.from_rows([[0.5, 0.5], [1.0, 0.0], [0.0, 1.0]])
        assert (m.n_rows, m.n_cols) == (3, 2)
        assert m.column_sums() == (1.5, 1.5)
        assert m.column(0) == (0.5, 1.0, 0.0)
        assert m.max_weight() == 1.0

    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            AttentionMatrix(())
        with pytest.raises(ValueError):
            AttentionMatrix(((),))

    def test_rejects_ragged(self):
        with pytest.raises(ValueError, match="ragged"):
            AttentionMatrix.from_rows([[1.0, 0.0], [1.0]])

    @pytest.mark.parametrize("bad", [float("nan"), float("inf"), -0.1])
    def test_rejects_nonfinite_and_negative(self, bad):
        with pytest.raises(ValueError):
            AttentionMatrix.from_rows([[bad]])


class TestAlignmentRecord:
    def test_dimension_mismatch_names_record(self):
        with pytest.raises(ValueError, match="'bad'"):
            make_record("bad", "a b", "x", [[0.5, 0.5], [0.5, 0.5]])

    @pytest.mark.parametrize("tok", ["", "a b", "a\tb", "a\nb", "\xa0"])
    def test_rejects_whitespace_tokens(self, tok):
        with pytest.raises(ValueError):
            AlignmentRecord(
                id="r",
                src_tokens=(tok,),
                hyp_tokens=("x",),
                attention=identity(1),
            )

    def test_rejects_bad_ids(self):
        for bad in ("", "a\tb", "a\nb"):
            with pytest.raises(ValueError):
                AlignmentRecord(
                    id=bad, src_tokens=("a",), hyp_tokens=("x",), attention=identity(1)
                )

    def test_rejects_blank_or_tabbed_reference(self):
        for bad in ("   ", "a\tb"):
            with pytest.raises(ValueError):
                make_record("r", "a", "x", [[1.0]], ref=bad)

    def test_detokenized_views(self):
        rec = make_record("r", "a b", "x y", [[0.5, 0.5], [0.5, 0.5]])
        assert rec.src_text == "a b"
        assert rec.hyp_text == "x y"
        assert (rec.src_len, rec.hyp_len) == (2, 2)


class TestDataset:
    def test_rejects_empty(self):
        with pytest.raises(ValueError, match="empty"):
            Dataset(system_name="s", records=())

    def test_rejects_duplicate_ids(self):
        rec = make_record("dup", "a", "x", [[1.0]])
        with pytest.raises(ValueError, match="dup"):
            Dataset(system_name="s", records=(rec, rec))


class TestValidateRecord:
    def test_identity_matrix_clean(self):
        rec = make_record("r", "a b", "x y", [[1.0, 0.0], [0.0, 1.0]])
        assert validate_record(rec) == []

    def test_row_sum_warning(self):
        rec = make_record("r", "a b", "x", [[0.2, 0.2]])
        warnings = validate_record(rec)
        assert [w.kind for w in warnings] == ["row-sum"]
        assert "0.4" in warnings[0].message

    def test_zero_row_warns_but_usable(self):
        rec = make_record("r", "a b", "x y", [[0.0, 0.0], [1.0, 0.0]])
        kinds = {w.kind for w in validate_record(rec)}
        assert "zero-row" in kinds

    def test_multilayer_sums_warn_only(self):
        # summed multi-layer attention: every row sums to ~15
        rows = [[2.5] * 6 for _ in range(6)]
        rec = make_record("ml", "a b c d e f", "u v w x y z", rows)
        warnings = validate_record(rec)
        assert {w.kind for w in warnings} == {"row-sum", "weight-above-one"}
        assert len([w for w in warnings if w.kind == "row-sum"]) == 6
