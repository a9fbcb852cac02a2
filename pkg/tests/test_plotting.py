import pytest

from curlicue import interferogram_svg


class TestSvgRendering:
    def test_deterministic_bytes(self, demo_interferogram):
        a = interferogram_svg(demo_interferogram, [1308567, 1306349])
        b = interferogram_svg(demo_interferogram, [1308567, 1306349])
        assert a == b

    def test_well_formed_envelope(self, demo_interferogram):
        svg = interferogram_svg(demo_interferogram)
        assert svg.startswith('<?xml version="1.0"')
        assert "<svg " in svg
        assert svg.rstrip().endswith("</svg>")
        assert "<polyline " in svg

    def test_rescaled_axes_carry_integer_ticks(self, demo_interferogram):
        svg = interferogram_svg(demo_interferogram, [1308567, 1306349])
        # factors of both demo targets must appear as tick labels
        assert ">1157<" in svg
        assert ">1153<" in svg
        assert "n=1308567" in svg
        assert "n=1306349" in svg

    def test_plain_plot_has_no_target_axes(self, demo_interferogram):
        svg = interferogram_svg(demo_interferogram)
        assert "#8c2d2d" not in svg  # target-axis color never drawn
        assert "n=1308567" not in svg

    def test_single_target(self, demo_interferogram):
        svg = interferogram_svg(demo_interferogram, [1308567])
        assert "n=1308567" in svg
        assert "n=1306349" not in svg

    def test_rejects_more_than_two_targets(self, demo_interferogram):
        with pytest.raises(ValueError):
            interferogram_svg(demo_interferogram, [10, 20, 30])

    def test_wavelength_labels_present(self, demo_interferogram):
        svg = interferogram_svg(demo_interferogram)
        assert "wavelength (nm)" in svg
        assert "intensity" in svg
