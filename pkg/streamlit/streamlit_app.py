"""
powersum explorer: equal sums of six like powers, degrees 2 to 9.
Run with ./scripts/run_explorer.sh (or `streamlit run streamlit/streamlit_app.py` with the package installed).
"""

from fractions import Fraction

import pandas as pd
import plotly.graph_objects as go

import streamlit as st
from powersum import __version__
from powersum.audit import audit_errata, audit_examples
from powersum.elliptic import DEG8_Q, DEG9_P, curve_points_real, deg8_curve, deg9_curve
from powersum.errors import PowersumError, SearchTooLargeError
from powersum.exactcore import canonicalize, parse_rational
from powersum.families import (
    DEG3_SHIFT_BASE,
    DEG3_SYMMETRIC_BASE,
    deg2_family,
    deg3_shift_family,
    deg3_symmetric_family,
    deg4_family,
    deg5_66_family,
    deg6_family,
    deg7_family,
    deg8_family,
    deg9_family,
)
from powersum.frames import audit_frame, errata_frame, multiples_frame, pairs_frame, residual_frame, table_a_frame
from powersum.oracle import SearchSpec, estimate_work, search

# ---------------------------------------------------------------------------
# Page config
# ---------------------------------------------------------------------------
st.set_page_config(
    page_title="powersum explorer",
    page_icon="🧮",
    layout="wide",
    initial_sidebar_state="collapsed",
)

# ---------------------------------------------------------------------------
# Dark palette CSS
# ---------------------------------------------------------------------------
EXPLORER_CSS = """
<style>
@import url('https://fonts.googleapis.com/css2?family=Inter:wght@400;500;600;700&display=swap');

:root {
    --canvas: #191e24;
    --surface: #1e252f;
    --border: #293246;
    --text-primary: #bdc4d5;
    --text-secondary: #9fabc1;
    --text-header: #bdc4d5;
    --accent: #1a6ce7;
    --success: #1db588;
    --warning: #e8a317;
    --danger: #ef405e;
    --shadow-dark: #12161c;
    --shadow-light: #242d38;
}

html, body, [class*="st-"] {
    font-family: 'Inter', -apple-system, BlinkMacSystemFont, sans-serif !important;
}

.stat-card {
    background: var(--surface);
    border-radius: 16px;
    padding: 20px 24px;
    box-shadow: 6px 6px 12px var(--shadow-dark),
                -6px -6px 12px var(--shadow-light);
    text-align: center;
    min-height: 100px;
}
.stat-card .stat-value {
    font-size: 1.6rem;
    font-weight: 700;
    color: var(--text-header);
    margin: 4px 0;
    word-break: break-all;
}
.stat-card .stat-label {
    font-size: 0.8rem;
    font-weight: 500;
    color: var(--text-secondary);
    text-transform: uppercase;
    letter-spacing: 0.05em;
}

.pass-badge {
    display: inline-block;
    padding: 4px 12px;
    border-radius: 20px;
    font-size: 0.75rem;
    font-weight: 600;
    text-transform: uppercase;
    letter-spacing: 0.03em;
}
.pass-yes { background: rgba(29,181,136,0.15); color: #1db588; }
.pass-no { background: rgba(211,19,47,0.15); color: #ef405e; }
.pass-na { background: rgba(159,171,193,0.15); color: #9fabc1; }

.section-header {
    font-size: 1.1rem;
    font-weight: 600;
    color: var(--text-header);
    margin-bottom: 16px;
    padding-bottom: 8px;
    border-bottom: 2px solid var(--accent);
    display: inline-block;
}

.app-title {
    font-size: 1.6rem;
    font-weight: 700;
    color: var(--text-header);
    margin: 0;
}
.app-subtitle {
    font-size: 0.85rem;
    color: var(--text-secondary);
    margin: 0;
}

.pair-side {
    font-family: 'SF Mono', Monaco, Consolas, 'Courier New', monospace;
    font-size: 0.85rem;
    color: var(--text-primary);
    background: #13161c;
    border-radius: 6px;
    padding: 10px 14px;
    margin-bottom: 8px;
    word-break: break-all;
}
</style>
"""
st.html(EXPLORER_CSS)

PLOT_LAYOUT = dict(
    paper_bgcolor="#191e24",
    plot_bgcolor="#1e252f",
    margin=dict(l=20, r=20, t=40, b=10),
    font=dict(family="Inter", color="#9fabc1"),
)


# ---------------------------------------------------------------------------
# Helpers
# ---------------------------------------------------------------------------
def pass_badge(passed) -> str:
    label, css_class = {True: ("pass", "pass-yes"), False: ("fail", "pass-no")}.get(passed, ("n/a", "pass-na"))
    return f'<span class="pass-badge {css_class}">{label}</span>'


def stat_card(label: str, value: str, color: str = "var(--text-header)") -> str:
    return f"""
    <div class="stat-card">
        <div class="stat-label">{label}</div>
        <div class="stat-value" style="color:{color}">{value}</div>
    </div>
    """


def side_html(label: str, values) -> str:
    return f'<div class="pair-side"><b>{label}</b> {", ".join(str(v) for v in values)}</div>'


def parse_params(raw: dict[str, str], integers: tuple[str, ...] = ()) -> dict[str, Fraction | int]:
    """Text inputs to exact parameters; names in ``integers`` must be whole numbers."""
    params: dict[str, Fraction | int] = {}
    for name, text in raw.items():
        value = parse_rational(text.strip())
        if name in integers:
            if value.denominator != 1:
                raise ValueError(f"{name} must be an integer, got {value}")
            value = int(value)
        params[name] = value
    return params


# family -> (parameter defaults, integer parameters, builder)
FAMILIES = {
    "deg2": ({"k": "2"}, (), lambda p: deg2_family(p["k"])),
    "deg3-shift": ({}, (), lambda p: deg3_shift_family(*DEG3_SHIFT_BASE).pair),
    "deg3-sym": ({"x": "1"}, (), lambda p: deg3_symmetric_family(*DEG3_SYMMETRIC_BASE, p["x"])),
    "deg4": ({"k": "2"}, (), lambda p: deg4_family(p["k"])),
    "deg5": ({"m": "2"}, (), lambda p: deg5_66_family(p["m"])),
    "deg6": ({"a1": "1", "b2": "1", "k": "1"}, ("a1", "b2", "k"), lambda p: deg6_family(p["a1"], p["b2"], p["k"])),
    "deg7": (
        {"p": "3", "q": "2", "a": "1", "b": "13"},
        ("p", "q", "a", "b"),
        lambda p: deg7_family(p["p"], p["q"], p["a"], p["b"]),
    ),
    "deg8": ({"x": "1", "a": "47", "b": "82"}, (), lambda p: deg8_family(p["x"], p["a"], p["b"])),
    "deg9": ({"a": "3", "b": "4", "t": "27/41"}, (), lambda p: deg9_family(p["a"], p["b"], p["t"])),
}

CURVES = {
    "Degree 8": (deg8_curve, DEG8_Q),
    "Degree 9": (deg9_curve, DEG9_P),
}


@st.cache_data
def load_table_a() -> pd.DataFrame:
    return table_a_frame()


@st.cache_data
def load_audit() -> tuple[pd.DataFrame, pd.DataFrame]:
    return audit_frame(audit_examples()), errata_frame(audit_errata())


@st.cache_data
def load_multiples(curve_name: str, count: int) -> pd.DataFrame:
    curve_fn, base = CURVES[curve_name]
    return multiples_frame(curve_fn(), base, count)


# ---------------------------------------------------------------------------
# Title bar
# ---------------------------------------------------------------------------
st.html(
    '<div style="padding:8px 0 16px 0;">'
    '<p class="app-title">powersum explorer</p>'
    f'<p class="app-subtitle">Equal sums of six like powers, degrees 2 to 9 &middot; v{__version__}</p>'
    "</div>"
)

# ---------------------------------------------------------------------------
# Tabs
# ---------------------------------------------------------------------------
tab_families, tab_curves, tab_table, tab_search = st.tabs(
    [
        ":material/functions: Families",
        ":material/timeline: Elliptic",
        ":material/table_chart: Table A & errata",
        ":material/search: Search",
    ]
)

# ===== TAB 1: Families =======================================================
with tab_families:
    ctrl_col, out_col = st.columns([1, 2])
    with ctrl_col:
        st.html('<div class="section-header">Parameters</div>')
        family = st.selectbox("Family", list(FAMILIES), index=0)
        defaults, integer_params, builder = FAMILIES[family]
        raw = {name: st.text_input(name, value=default, key=f"{family}-{name}") for name, default in defaults.items()}
        show_canonical = st.toggle("Canonical form", value=True)

    with out_col:
        try:
            pair = builder(parse_params(raw, integer_params))
        except (PowersumError, ValueError) as exc:
            st.error(f"{type(exc).__name__}: {exc}")
            pair = None

        if pair is not None:
            shown = canonicalize(pair) if show_canonical else pair
            residuals = residual_frame(shown)
            passed = bool(residuals["passes"].all())
            kpi_cols = st.columns(3)
            with kpi_cols[0]:
                st.html(stat_card("Degrees", ", ".join(str(k) for k in sorted(shown.degrees))))
            with kpi_cols[1]:
                st.html(stat_card("Terms", f"{len(shown.lhs)} vs {len(shown.rhs)}"))
            with kpi_cols[2]:
                st.html(stat_card("Verified", pass_badge(passed)))
            st.html(side_html("LHS", shown.lhs) + side_html("RHS", shown.rhs))
            if shown.is_trivial:
                st.warning("Both sides are the same multiset; this instance is trivial.")
            st.dataframe(residuals, use_container_width=True, hide_index=True)
            st.caption(pair.source)

# ===== TAB 2: Elliptic =======================================================
with tab_curves:
    ctrl_col, plot_col = st.columns([1, 2])
    with ctrl_col:
        st.html('<div class="section-header">Curve</div>')
        curve_name = st.radio("Model", list(CURVES), horizontal=True)
        count = st.slider("Multiples", min_value=1, max_value=8, value=4)
        curve_fn, base_point = CURVES[curve_name]
        curve = curve_fn()
        st.code(str(curve), language=None)
        st.html(stat_card("Discriminant", str(curve.discriminant)))

    multiples = load_multiples(curve_name, count)
    with plot_col:
        finite = multiples.dropna(subset=["x (float)"])
        # huge multiples flatten the plot; keep the window near the base point
        window = finite[finite["x (float)"].abs() <= 50 * max(abs(float(base_point.x)), 1.0)]
        low = min(window["x (float)"].min(), 0.0) - 10
        high = window["x (float)"].max() * 1.2 + 10
        xs, upper, lower = curve_points_real(curve, (low, high))
        fig = go.Figure()
        fig.add_trace(go.Scatter(x=xs, y=upper, mode="lines", line=dict(color="#5999f8"), name="real locus"))
        fig.add_trace(go.Scatter(x=xs, y=lower, mode="lines", line=dict(color="#5999f8"), showlegend=False))
        fig.add_trace(
            go.Scatter(
                x=window["x (float)"],
                y=window["y (float)"],
                mode="markers+text",
                text=[f"{n}P" for n in window["n"]],
                textposition="top center",
                marker=dict(size=10, color="#e8a317"),
                name="multiples",
            )
        )
        fig.update_layout(height=420, **PLOT_LAYOUT)
        st.plotly_chart(fig, use_container_width=True)

    st.html('<div class="section-header">Multiples nP</div>')
    st.dataframe(multiples, use_container_width=True, hide_index=True)
    integral = multiples["integral"].dropna()
    if len(integral) and not integral.all():
        st.caption("A non-integral multiple on an integral model: evidence of infinite order.")

# ===== TAB 3: Table A & errata ===============================================
with tab_table:
    st.html('<div class="section-header">Table A</div>')
    table = load_table_a()
    st.dataframe(table, use_container_width=True, hide_index=True)

    st.html('<div class="section-header">Worked examples and errata</div>')
    if st.button("Run audit", key="run_audit"):
        examples, errata = load_audit()
        reproduced = int((examples["reproduced"] == "yes").sum())
        audit_cols = st.columns(3)
        with audit_cols[0]:
            st.html(stat_card("Printed examples valid", f"{int(examples['printed valid'].sum())} / {len(examples)}"))
        with audit_cols[1]:
            st.html(stat_card("Reproduced", str(reproduced), "var(--success)"))
        with audit_cols[2]:
            st.html(stat_card("Errata resolved", f"{int(errata['holds'].sum())} / {len(errata)}"))
        st.dataframe(examples, use_container_width=True, hide_index=True)
        st.dataframe(errata, use_container_width=True, hide_index=True)

# ===== TAB 4: Search =========================================================
with tab_search:
    with st.form("search"):
        form_cols = st.columns(4)
        with form_cols[0]:
            degrees_text = st.text_input("Degrees", value="3")
        with form_cols[1]:
            height = st.number_input("Height", min_value=1, max_value=64, value=10)
        with form_cols[2]:
            side_len = st.number_input("Side length", min_value=1, max_value=6, value=6)
        with form_cols[3]:
            sign_mode = st.selectbox("Entries", ["auto", "signed", "unsigned"], index=2)
        submitted = st.form_submit_button("Search")

    if submitted:
        try:
            degrees = frozenset(int(part) for part in degrees_text.split(",") if part.strip())
            signed = {"auto": None, "signed": True, "unsigned": False}[sign_mode]
            spec = SearchSpec(degrees, int(height), int(side_len), signed)
            st.caption(f"{estimate_work(spec):,} side multisets to enumerate")
            with st.spinner("Searching..."):
                found = search(spec)
        except SearchTooLargeError as exc:
            st.error(str(exc))
        except (PowersumError, ValueError) as exc:
            st.error(f"{type(exc).__name__}: {exc}")
        else:
            st.html(stat_card("Canonical pairs", str(len(found))))
            st.dataframe(pairs_frame(found), use_container_width=True, hide_index=True)
