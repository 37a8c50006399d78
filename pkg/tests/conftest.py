import pytest
from hypothesis import strategies as st

from attnscope import AlignmentRecord, AttentionMatrix, Dataset

# No whitespace (tokens may not contain any), but deliberately includes
# the matrix/flag separator characters , ; { } = and '#'.
TOKEN_ALPHABET = "abcdefgxyzABXZ0189_,;#{}=|%àéß"

token_st = st.text(alphabet=TOKEN_ALPHABET, min_size=1, max_size=5)

weight_st = st.one_of(
    st.sampled_from([0.0, 0.5, 1.0]),
    st.floats(min_value=0.0, max_value=2.0, allow_nan=False, allow_infinity=False),
)

# ids may contain spaces; only TAB/newline/empty are out
id_st = st.text(alphabet=TOKEN_ALPHABET + " ", min_size=1, max_size=8)

ref_st = st.text(alphabet=TOKEN_ALPHABET + " ", min_size=1, max_size=25).filter(
    lambda s: s.strip() != ""
)


@st.composite
def matrices(draw, max_rows=5, max_cols=5):
    n_rows = draw(st.integers(1, max_rows))
    n_cols = draw(st.integers(1, max_cols))
    rows = draw(
        st.lists(
            st.lists(weight_st, min_size=n_cols, max_size=n_cols),
            min_size=n_rows,
            max_size=n_rows,
        )
    )
    return AttentionMatrix.from_rows(rows)


@st.composite
def records(draw, rec_id=None, with_ref=None):
    src = tuple(draw(st.lists(token_st, min_size=1, max_size=5)))
    hyp = tuple(draw(st.lists(token_st, min_size=1, max_size=5)))
    rows = draw(
        st.lists(
            st.lists(weight_st, min_size=len(src), max_size=len(src)),
            min_size=len(hyp),
            max_size=len(hyp),
        )
    )
    if with_ref is None:
        with_ref = draw(st.booleans())
    ref = draw(ref_st) if with_ref else None
    if rec_id is None:
        rec_id = draw(id_st)
    return AlignmentRecord(
        id=rec_id,
        src_tokens=src,
        hyp_tokens=hyp,
        attention=AttentionMatrix.from_rows(rows),
        ref_text=ref,
    )


@st.composite
def datasets(draw, min_records=1, max_records=6, with_ref=None):
    n = draw(st.integers(min_records, max_records))
    ids = draw(st.lists(id_st, min_size=n, max_size=n, unique=True))
    recs = tuple(draw(records(rec_id=ids[i], with_ref=with_ref)) for i in range(n))
    name = draw(st.text(alphabet=TOKEN_ALPHABET + " ", max_size=10))
    return Dataset(system_name=name, records=recs)


def make_record(rec_id, src, hyp, rows, ref=None):
    return AlignmentRecord(
        id=rec_id,
        src_tokens=tuple(src.split()),
        hyp_tokens=tuple(hyp.split()),
        attention=AttentionMatrix.from_rows(rows),
        ref_text=ref,
    )


def diagonal_record(rec_id, tokens, ref=None):
    """Verbatim-copy record: identical source/hypothesis, identity attention."""
    toks = tuple(tokens.split())
    n = len(toks)
    rows = [[1.0 if i == j else 0.0 for i in range(n)] for j in range(n)]
    return make_record(rec_id, tokens, tokens, rows, ref=ref)


@pytest.fixture
def simple_record():
    return make_record("r0", "a b", "x", [[0.5, 0.5]])
