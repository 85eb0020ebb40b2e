import asyncio
import math
import threading

import pytest
from exceptions import CalibrationException, ConfigException, InvalidArgument
from tools import BoundReport, CalibrationStore, Config, Tasks, emit_csv, format_value, map_ordered


def test_config_dotted_paths():
    config = Config(config={"x_max": 1000, "limits": {"max_ideals": 50}})
    assert config.require("x_max") == 1000
    assert config.optional("limits.max_ideals") == 50
    assert config.optional("limits.other", 3) == 3
    assert config.optional("minimizer.spacing") is None
    with pytest.raises(ConfigException):
        config.require("seed")


def test_config_override_keeps_file_values():
    config = Config(config={"x_max": 1000, "seed": 1})
    config.override({"x_max": 5000, "seed": None})
    assert config.optional("x_max") == 5000
    assert config.optional("seed") == 1


def test_config_from_file(tmp_path):
    path = tmp_path / "run.yaml"
    path.write_text("x_max: 20000\nf: mu\nminimizer:\n  spacing: 0.01\n", encoding="utf-8")
    config = Config(str(path))
    assert config.optional("f") == "mu"
    assert config.optional("minimizer.spacing") == 0.01


def test_config_rejects_bad_files(tmp_path):
    broken = tmp_path / "broken.yaml"
    broken.write_text("x_max: [1, 2\n", encoding="utf-8")
    with pytest.raises(ConfigException):
        Config(str(broken))
    listing = tmp_path / "list.yaml"
    listing.write_text("- 1\n- 2\n", encoding="utf-8")
    with pytest.raises(ConfigException):
        Config(str(listing))
    with pytest.raises(ConfigException):
        Config()


def test_store_round_trip(tmp_path):
    location = str(tmp_path / "calib.txt")
    store = CalibrationStore(location)
    store.set("psi_over_x", "0123456789ab", 2.5)
    store.set("mertens", "ba9876543210", 0.125)
    store.persist()

    with open(location, encoding="utf-8") as store_file:
        lines = store_file.read().splitlines()
    assert lines == ["# tag param_hash constant", "mertens ba9876543210 0.125", "psi_over_x 0123456789ab 2.5"]

    reloaded = CalibrationStore(location)
    assert len(reloaded) == 2
    assert reloaded.get("psi_over_x") == 2.5
    assert reloaded.has("mertens")
    reloaded.delete("mertens")
    assert reloaded.get("mertens", 7.0) == 7.0


def test_store_rejects_malformed_lines(tmp_path):
    location = tmp_path / "calib.txt"
    location.write_text("# comment\n\npsi_over_x abc\n", encoding="utf-8")
    with pytest.raises(CalibrationException):
        CalibrationStore(str(location))
    location.write_text("psi_over_x abc many\n", encoding="utf-8")
    with pytest.raises(CalibrationException):
        CalibrationStore(str(location))
    with pytest.raises(CalibrationException):
        CalibrationStore("")


def test_format_value():
    assert format_value(True) == "true"
    assert format_value(12) == "12"
    assert format_value(math.pi) == "3.14159265359"
    assert format_value(math.nan) == "nan"
    assert format_value("split_primary") == "split_primary"


def test_emit_csv(tmp_path):
    path = tmp_path / "out.csv"
    rows = [{"x": 10, "value": 1 / 3, "ok": False}, {"x": 100, "value": 2.0, "ok": True}]
    assert emit_csv(rows, ["x", "value", "ok"], str(path)) == 2
    assert path.read_bytes() == b"x,value,ok\n10,0.333333333333,false\n100,2,true\n"


def test_emit_csv_round_trip(tmp_path):
    path = tmp_path / "out.csv"
    values = [math.pi * 10**k for k in range(-5, 6)]
    emit_csv([{"v": v} for v in values], ["v"], str(path))
    parsed = [float(line) for line in path.read_text(encoding="utf-8").splitlines()[1:]]
    for value, read in zip(values, parsed):
        assert read == pytest.approx(value, rel=1e-10)


def test_emit_csv_refuses_empty(tmp_path):
    path = tmp_path / "empty.csv"
    with pytest.raises(InvalidArgument):
        emit_csv([], ["x"], str(path))
    assert not path.exists()


def test_bound_report():
    report = BoundReport("psi_over_x", {"x": 1000}, 500.0, 1000.0)
    assert report.ratio == 0.5
    assert report.param_hash == BoundReport("psi_over_x", {"x": 1000}, 1.0, 2.0).param_hash
    assert report.param_hash != BoundReport("psi_over_x", {"x": 10_000}, 1.0, 2.0).param_hash
    assert len(report.param_hash) == 12
    assert math.isnan(report.row()["constant"])
    with pytest.raises(InvalidArgument):
        BoundReport("psi_over_x", {}, 1.0, 0.0)
    with pytest.raises(InvalidArgument):
        BoundReport("psi_over_x", {}, math.inf, 1.0)


def test_tasks_keep_spawn_order():
    async def run():
        async with Tasks(4) as tasks:
            for value in range(20):
                tasks.spawn(lambda v: (threading.get_ident(), v * v), value, name=f"square {value}")
            return await tasks.gather()

    results = asyncio.run(run())
    assert [value for _, value in results] == [v * v for v in range(20)]


def test_tasks_propagate_failures():
    def fail():
        raise InvalidArgument("boom")

    async def run():
        async with Tasks(2) as tasks:
            tasks.spawn(fail, name="fail")
            await tasks.gather()

    with pytest.raises(InvalidArgument):
        asyncio.run(run())


def test_map_ordered():
    assert map_ordered(lambda v: v + 1, range(10), threads=3) == list(range(1, 11))
    assert map_ordered(lambda v: v, [], threads=3) == []
