import csv

from aeroshield.report import (
    EXCEEDANCE_CSV_COLUMNS,
    PROFILE_CSV_COLUMNS,
    write_report,
)


class TestWriteReport:
    def test_bundle_files_exist(self, engine, tmp_path):
        paths = write_report(engine, "decadal-active", tmp_path)
        names = {p.name for p in paths}
        assert names == {
            "decadal-active-profile.csv",
            "decadal-active-profile.png",
            "exceedance.csv",
            "exceedance.png",
        }
        for p in paths:
            assert p.stat().st_size > 0
        for p in paths:
            if p.suffix == ".png":
                assert p.stat().st_size > 1000  # a real rendered figure

    def test_profile_csv_matches_engine_rows(self, engine, tmp_path):
        paths = write_report(engine, "decadal-active", tmp_path, points=9)
        csv_path = next(p for p in paths if p.name.endswith("profile.csv"))
        with csv_path.open() as fh:
            reader = csv.DictReader(fh)
            assert tuple(reader.fieldnames) == PROFILE_CSV_COLUMNS
            rows = list(reader)
        expected = engine.profile_rows("decadal-active", 9)
        assert len(rows) == len(expected)
        for got, want in zip(rows, expected):
            assert float(got["depth_gcm2"]) == want["depth_gcm2"]
            assert float(got["altitude_km"]) == want["altitude_km"]
            assert float(got["dose_sv"]) == want["dose_sv"]

    def test_exceedance_csv_contains_catalog_points(self, engine, tmp_path):
        paths = write_report(engine, "pmf", tmp_path)
        csv_path = next(p for p in paths if p.name == "exceedance.csv")
        with csv_path.open() as fh:
            reader = csv.DictReader(fh)
            assert tuple(reader.fieldnames) == EXCEEDANCE_CSV_COLUMNS
            rows = {float(r["x_magnitude"]): float(r["annual_probability"]) for r in reader}
        assert rows[13.0] == 0.4
        assert rows[45.0] == 0.006
        assert rows[1001.0] == 0.0007

    def test_pmf_profile_renders(self, engine, tmp_path):
        paths = write_report(engine, "pmf", tmp_path)
        png = next(p for p in paths if p.name == "pmf-profile.png")
        assert png.stat().st_size > 1000
