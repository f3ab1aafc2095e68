"""
Headless functional tests for the powersum explorer using Streamlit AppTest.

Helpers are loaded from the app source without running it; the app itself is
run headless, so no browser or server is needed.
"""

import ast
import os
import re
import warnings
from fractions import Fraction

import pytest

from powersum.exactcore import parse_rational

APP_PATH = os.path.join(
    os.path.dirname(os.path.dirname(os.path.abspath(__file__))),
    "streamlit",
    "streamlit_app.py",
)

with open(APP_PATH) as _f:
    APP_SOURCE = _f.read()


# ---------------------------------------------------------------------------
# Helpers, loaded without running the app
# ---------------------------------------------------------------------------


@pytest.mark.streamlit
class TestHelperFunctions:
    """Unit tests for pure helper functions in streamlit_app.py."""

    HELPERS = ("pass_badge", "stat_card", "side_html", "parse_params")

    @pytest.fixture(autouse=True)
    def _import_helpers(self):
        """Compile only the helper definitions so top-level st.* calls never run."""
        tree = ast.parse(APP_SOURCE)
        nodes = [node for node in tree.body if isinstance(node, ast.FunctionDef) and node.name in self.HELPERS]
        assert [node.name for node in nodes] == list(self.HELPERS)
        namespace = {"Fraction": Fraction, "parse_rational": parse_rational}
        exec(compile(ast.Module(body=nodes, type_ignores=[]), APP_PATH, "exec"), namespace)  # noqa: S102
        for name in self.HELPERS:
            setattr(self, name, namespace[name])

    def test_pass_badge_pass(self):
        html = self.pass_badge(True)
        assert 'class="pass-badge pass-yes"' in html
        assert "pass" in html

    def test_pass_badge_fail(self):
        assert "pass-no" in self.pass_badge(False)

    def test_pass_badge_unknown_is_na(self):
        assert "n/a" in self.pass_badge(None)

    def test_stat_card_contains_label_and_value(self):
        html = self.stat_card("Degrees", "1, 3, 9")
        assert "Degrees" in html
        assert "1, 3, 9" in html

    def test_stat_card_custom_color(self):
        assert "color:#1db588" in self.stat_card("Verified", "yes", color="#1db588")

    def test_side_html(self):
        assert "3, 4, 5" in self.side_html("lhs", [3, 4, 5])

    def test_parse_params_rational(self):
        assert self.parse_params({"t": " 27/41 "}) == {"t": Fraction(27, 41)}

    def test_parse_params_integer(self):
        params = self.parse_params({"k": "3"}, ("k",))
        assert params["k"] == 3
        assert isinstance(params["k"], int)

    def test_parse_params_rejects_fraction_for_integer(self):
        with pytest.raises(ValueError):
            self.parse_params({"k": "1/2"}, ("k",))


# ---------------------------------------------------------------------------
# AppTest: headless runs (requires streamlit.testing)
# ---------------------------------------------------------------------------


def _has_apptest():
    """Check if Streamlit AppTest framework is available."""
    try:
        from streamlit.testing.v1 import AppTest  # noqa: F401

        return True
    except ImportError:
        return False


@pytest.mark.streamlit
@pytest.mark.skipif(not _has_apptest(), reason="streamlit.testing not available")
class TestAppTestRendering:
    """Headless functional tests using Streamlit's AppTest framework."""

    def _create_app(self):
        from streamlit.testing.v1 import AppTest

        at = AppTest.from_file(APP_PATH, default_timeout=30)
        at.run()
        return at

    def test_app_runs_without_exception(self):
        at = self._create_app()
        assert not at.exception, f"App raised exception: {at.exception}"

    def test_tabs_exist(self):
        at = self._create_app()
        assert len(at.tabs) >= 4, f"Expected 4+ tabs, got {len(at.tabs)}"

    def test_no_unhandled_errors(self):
        at = self._create_app()
        errors = [e.value for e in at.error]
        assert not errors, f"Default parameters produced errors: {errors}"

    def test_select_degree_nine(self):
        at = self._create_app()
        at.selectbox[0].select("deg9").run()
        assert not at.exception, f"App raised exception: {at.exception}"
        assert not list(at.error), "deg9 defaults should verify"

    def test_bad_parameter_shows_error(self):
        at = self._create_app()
        at.text_input(key="deg2-k").input("not a number").run()
        assert not at.exception
        assert len(at.error) >= 1, "malformed input should surface through st.error"

    def test_search_form(self):
        at = self._create_app()
        at.button[-1].click().run()
        assert not at.exception, f"Search raised exception: {at.exception}"

    @pytest.mark.slow
    def test_run_audit(self):
        at = self._create_app()
        at.button(key="run_audit").click().run(timeout=60)
        assert not at.exception, f"Audit raised exception: {at.exception}"


# ---------------------------------------------------------------------------
# CSS consistency tests (static, no AppTest needed)
# ---------------------------------------------------------------------------


@pytest.mark.streamlit
class TestCSSThemeConsistency:
    """Validate the CSS block the app injects."""

    def _extract_css_block(self) -> str:
        match = re.search(r'EXPLORER_CSS\s*=\s*"""(.*?)"""', APP_SOURCE, re.DOTALL)
        return match.group(1) if match else ""

    def _extract_root_vars(self, css: str) -> dict:
        root_match = re.search(r":root\s*\{([^}]+)\}", css)
        if not root_match:
            return {}
        pairs = re.findall(r"--([\w-]+)\s*:\s*([^;]+);", root_match.group(1))
        return {f"--{name}": val.strip() for name, val in pairs}

    def test_all_css_vars_referenced(self):
        """Every CSS custom property defined in :root should be used somewhere."""
        css = self._extract_css_block()
        root_vars = self._extract_root_vars(css)
        assert root_vars, "No CSS custom properties found in :root"
        search_text = re.sub(r":root\s*\{[^}]+\}", "", css) + APP_SOURCE
        unreferenced = [name for name in root_vars if f"var({name})" not in search_text]
        if unreferenced:
            warnings.warn(f"CSS variables defined but never referenced via var(): {unreferenced}", stacklevel=1)

    def test_font_import_url_valid(self):
        """The @import url(...) should reference fonts.googleapis.com."""
        for url in re.findall(r"@import\s+url\(['\"]([^'\"]+)['\"]\)", self._extract_css_block()):
            assert "fonts.googleapis.com" in url, f"Unexpected font import URL: {url}"

    def test_badge_classes_defined(self):
        css = self._extract_css_block()
        for cls in ("pass-yes", "pass-no", "pass-na", "stat-card"):
            assert f".{cls}" in css, f"missing CSS class .{cls}"
