import io

import pytest
from hypothesis import given, settings

from attnscope import Dataset, ParseError, parse_block_text, parse_canonical, serialize_canonical

from conftest import datasets, make_record


class TestParseCanonical:
    def test_minimal_record(self):
        ds = parse_canonical(b"r0\ta b\tx\t0.5,0.5\n")
        assert len(ds) == 1
        rec = ds.records[0]
        assert rec.src_tokens == ("a", "b")
        assert rec.hyp_tokens == ("x",)
        assert rec.attention.rows == ((0.5, 0.5),)
        assert rec.ref_text is None

    def test_reference_field(self):
        ds = parse_canonical("r0\ta\tx\t1.0\tthe ref text\n")
        assert ds.records[0].ref_text == "the ref text"

    def test_default_id_is_line_index(self):
        ds = parse_canonical(b"\ta\tx\t1.0\n\tb\ty\t1.0\n")
        assert [r.id for r in ds.records] == ["0", "1"]

    def test_accepts_file_object_and_crlf(self):
        ds = parse_canonical(io.BytesIO(b"r0\ta\tx\t1.0\r\n"))
        assert ds.records[0].id == "r0"

    def test_dimension_mismatch_names_record(self):
        with pytest.raises(ParseError) as err:
            parse_canonical(b"weird\ta\tx\t1.0;0.5\n")
        assert err.value.record_id == "weird"
        assert "mismatch" in str(err.value)

    def test_malformed_line_carries_line_number(self):
        data = b"r0\ta\tx\t1.0\nr1\tonly three fields\tx\n"
        with pytest.raises(ParseError) as err:
            parse_canonical(data)
        assert err.value.line_number == 2

    def test_unparseable_float(self):
        with pytest.raises(ParseError, match="unparseable"):
            parse_canonical(b"r0\ta\tx\tzap\n")

    def test_rejects_nan_weight(self):
        with pytest.raises(ParseError):
            parse_canonical(b"r0\ta\tx\tnan\n")

    def test_empty_stream(self):
        with pytest.raises(ParseError, match="empty dataset"):
            parse_canonical(b"")

    def test_blank_line_rejected_with_location(self):
        with pytest.raises(ParseError) as err:
            parse_canonical(b"r0\ta\tx\t1.0\n\nr2\ta\tx\t1.0\n")
        assert err.value.line_number == 2

    def test_duplicate_ids_rejected(self):
        data = b"same\ta\tx\t1.0\nsame\tb\ty\t1.0\n"
        with pytest.raises(ParseError, match="same"):
            parse_canonical(data)

    def test_order_preserved(self):
        data = b"z\ta\tx\t1.0\na\tb\ty\t1.0\nm\tc\tz\t1.0\n"
        ds = parse_canonical(data)
        assert [r.id for r in ds.records] == ["z", "a", "m"]


BLOCK = """# first
S: a b c
H: x y
0.1 0.2 0.7
0.9 0.05 0.05

"""


class TestParseBlockText:
    def test_minimal_block(self):
        ds = parse_block_text(BLOCK.encode())
        rec = ds.records[0]
        assert rec.id == "first"
        assert rec.src_tokens == ("a", "b", "c")
        assert rec.hyp_tokens == ("x", "y")
        assert rec.attention.rows[1] == (0.9, 0.05, 0.05)

    def test_reference_line(self):
        text = "# r\nS: a\nH: x\nR: the reference\n1.0\n\n"
        ds = parse_block_text(text)
        assert ds.records[0].ref_text == "the reference"

    def test_two_blocks_order_and_ids(self):
        text = "# one\nS: a\nH: x\n1.0\n\n# two\nS: b\nH: y\n0.5\n\n"
        ds = parse_block_text(text)
        assert [r.id for r in ds.records] == ["one", "two"]

    def test_missing_terminator_at_eof_tolerated(self):
        text = "# r\nS: a\nH: x\n1.0"
        ds = parse_block_text(text)
        assert len(ds) == 1

    def test_wrong_float_count_names_block_and_row(self):
        text = "# blk\nS: a b\nH: x y\n0.5 0.5\n0.5\n\n"
        with pytest.raises(ParseError) as err:
            parse_block_text(text)
        assert err.value.record_id == "blk"
        assert "row 1" in str(err.value)

    def test_default_block_id(self):
        text = "#\nS: a\nH: x\n1.0\n\n"
        ds = parse_block_text(text)
        assert ds.records[0].id == "0"

    def test_empty_stream(self):
        with pytest.raises(ParseError, match="empty dataset"):
            parse_block_text(b"\n\n")

    def test_truncated_block(self):
        with pytest.raises(ParseError, match="ended early"):
            parse_block_text("# r\nS: a\nH: x y\n1.0\n\n")


class TestSerializeCanonical:
    def test_single_record_single_line(self):
        ds = Dataset("s", (make_record("r0", "a b", "x", [[0.5, 0.5]]),))
        out = serialize_canonical(ds)
        assert out == b"r0\ta b\tx\t0.5,0.5\n"

    def test_reference_appended(self):
        ds = Dataset("s", (make_record("r0", "a", "x", [[1.0]], ref="ref here"),))
        assert serialize_canonical(ds).endswith(b"\tref here\n")

    def test_shortest_float_form(self):
        ds = Dataset("s", (make_record("r0", "a", "x", [[0.1]]),))
        assert b"\t0.1\n" in serialize_canonical(ds)


class TestRoundTrip:
    @settings(max_examples=200)
    @given(datasets())
    def test_parse_serialize_identity(self, ds):
        assert parse_canonical(serialize_canonical(ds), ds.system_name) == ds

    @settings(max_examples=200)
    @given(datasets())
    def test_serialize_parse_serialize_byte_identical(self, ds):
        once = serialize_canonical(ds)
        again = serialize_canonical(parse_canonical(once, ds.system_name))
        assert once == again
