import sys
sys.path.append("src")

import json
import os
import tempfile
from io import StringIO

import pytest
from sympy import QQ

from cli import build_parser, config_from_args, enumerate_family, groth_summary, main, run
from config import RunConfig, build_config, parse_rational
from errors import ConfigError
from shapes import parse_skew


def _run(config):
    out = StringIO()
    code = run(config, out)
    return code, out.getvalue()


def test_verify_command():
    args = build_parser().parse_args(["verify", "khlf", "--shape", "2,2", "--d", "2"])
    config = config_from_args(args)
    assert config.command == "verify" and config.identity == "khlf" and config.d == 2
    code, text = _run(config)
    rows = json.loads(text)
    assert code == 0
    assert rows[0]["identity"] == "khlf" and rows[0]["pass"] is True


def test_verify_needs_a_target():
    with pytest.raises(ConfigError):
        run(RunConfig(command="verify", identity="gamma-wnk"), StringIO())
    assert main(["verify", "khlf", "--shape", "3,2/1"]) == 2
    assert main(["verify", "no-such-identity", "--shape", "1"]) == 2


def test_enumerate_command():
    code, text = _run(RunConfig(command="enumerate", family="gexcited", shape="3,3,2/2,1"))
    result = json.loads(text)
    assert code == 0 and result["count"] == 11
    assert enumerate_family("excited", parse_skew("3,3,2/2,1"))["count"] == 5
    assert enumerate_family("pleasant", parse_skew("3,3,2/2,1"))["count"] == 88
    assert enumerate_family("sit", parse_skew("2,2"))["count"] == 3
    assert enumerate_family("ssvt", parse_skew("2,1"), d=2)["count"] == 3
    weights = enumerate_family("rpp", parse_skew("1"), truncation=2)
    assert weights["weights"] == {"0": 1, "1": 1, "2": 1}
    with pytest.raises(ConfigError):
        enumerate_family("ssyt", parse_skew("2,1"))


def test_sweep_command():
    config = RunConfig(command="sweep", identities=("hlf", "nhlf"), max_size=3, threads=2,
                       format="csv")
    code, text = _run(config)
    lines = text.splitlines()
    assert code == 0
    assert lines[0] == "identity,shape,d,mode,pass"
    assert all(line.endswith("True") for line in lines[1:])
    assert lines[1].startswith("hlf,")


def test_groth_command():
    summary = groth_summary(RunConfig(command="groth", perm="1432"))
    assert summary["mu"] == "2,1" and summary["supershape"] == "3,3,2"
    assert summary["excited"] == 5 and summary["generalized"] == 11
    assert summary["gamma"] == "beta**2 + 5*beta + 5"
    at_one = groth_summary(RunConfig(command="groth", perm="1432", beta=QQ(1),
                                     x=(QQ(1),) * 4, y=(QQ(0),) * 4))
    assert at_one["value"] == "11"
    with pytest.raises(ConfigError):
        groth_summary(RunConfig(command="groth", shape="2,1"))


def test_list_command():
    code, text = _run(RunConfig(command="list", format="table"))
    assert code == 0
    assert "khlf" in text and "gexcited" in text


def test_config_precedence():
    with tempfile.TemporaryDirectory() as tmp:
        path = os.path.join(tmp, "hooklab.toml")
        with open(path, "w") as f:
            f.write('[hooklab]\ntrials = 5\nseed = 3\nthreads = 2\ntol = "1/1000"\n')
        config = build_config({}, path, environ={})
        assert (config.trials, config.seed, config.threads) == (5, 3, 2)
        assert config.tol == QQ(1, 1000)
        config = build_config({}, path, environ={"HOOKLAB_SEED": "9"})
        assert config.seed == 9 and config.trials == 5
        config = build_config({"seed": 12}, path, environ={"HOOKLAB_SEED": "9"})
        assert config.seed == 12
        config = build_config({}, environ={"HOOKLAB_CONFIG": path})
        assert config.trials == 5


def test_config_errors():
    with pytest.raises(ConfigError):
        build_config({"colour": "red"}, environ={})
    with pytest.raises(ConfigError):
        build_config({}, "/nonexistent/hooklab.toml", environ={})
    with pytest.raises(ConfigError):
        build_config({"threads": 0}, environ={})
    with pytest.raises(ConfigError):
        build_config({}, environ={"HOOKLAB_TRIALS": "many"})
    with pytest.raises(ConfigError):
        parse_rational("1/x")
    assert parse_rational("-1/8") == QQ(-1, 8)


def test_output_file():
    with tempfile.TemporaryDirectory() as tmp:
        path = os.path.join(tmp, "out.edn")
        code, text = _run(RunConfig(command="verify", identity="hlf", shape="3,1",
                                    format="edn", output=path))
        assert code == 0 and text == ""
        with open(path, encoding="utf-8") as f:
            assert ":identity \"hlf\"" in f.read()

def test_enumeration_schema_keys():
    syt = enumerate_family("syt", parse_skew("2,1"))
    assert {"shape", "family", "count", "tableaux"} <= set(syt)
    assert "items" not in syt
    cell = syt["tableaux"][0]["cells"][0]
    assert set(cell) == {"r", "c", "entry"}
    ssvt = enumerate_family("ssvt", parse_skew("2,1"), d=2)
    assert all("entries" in c for T in ssvt["tableaux"] for c in T["cells"])
    excited = enumerate_family("excited", parse_skew("3,3,2/2,1"))
    assert len(excited["diagrams"]) == excited["count"] == 5
    assert all({"ambient", "cells", "peaks"} <= set(D) for D in excited["diagrams"])
    assert excited["diagrams"][0]["peaks"] == []
    pleasant = enumerate_family("pleasant", parse_skew("2,2/1"))
    assert all(set(D) >= {"ambient", "cells"} for D in pleasant["diagrams"])
    paths = enumerate_family("paths", parse_skew("3,3,2/2,1"))
    assert len(paths["families"]) == paths["count"] == 11


def test_sweep_is_independent_of_threads():
    outputs = []
    for threads in (1, 3, 1, 3):
        config = RunConfig(command="sweep", identities=("hlf", "nhlf", "khlf"), max_size=4,
                           threads=threads, format="json")
        code, text = _run(config)
        assert code == 0
        outputs.append(text)
    assert len(set(outputs)) == 1


def test_groth_principal_mode():
    args = build_parser().parse_args(["groth", "--perm", "1432", "--mode", "principal",
                                      "--beta", "formal"])
    config = config_from_args(args)
    assert config.mode == "principal" and config.beta is None
    summary = groth_summary(config)
    assert summary["mode"] == "principal" and summary["beta"] == "formal"
    assert summary["value"] == "beta**2 + 5*beta + 5"
    at_one = groth_summary(RunConfig(command="groth", perm="1432", mode="principal",
                                     beta=QQ(1)))
    assert at_one["value"] == "11"
    args = build_parser().parse_args(["groth", "--perm", "1432", "--beta", "-1/2"])
    assert config_from_args(args).beta == QQ(-1, 2)
    with pytest.raises(ConfigError):
        groth_summary(RunConfig(command="groth", shape="2,1", mode="principal"))
    with pytest.raises(ConfigError):
        groth_summary(RunConfig(command="groth", perm="1432", mode="single"))


def test_random_checks_repeat_without_a_seed():
    assert RunConfig().seed == 0
    config = RunConfig(command="verify", identity="khlf-multi", shape="2,1", d=2, trials=3)
    first, second = _run(config), _run(config)
    assert first == second
    assert json.loads(first[1])[0]["seed"] == 0


if __name__ == "__main__":
    test_verify_command()
    test_verify_needs_a_target()
    test_enumerate_command()
    test_sweep_command()
    test_groth_command()
    test_list_command()
    test_config_precedence()
    test_config_errors()
    test_output_file()
    test_enumeration_schema_keys()
    test_sweep_is_independent_of_threads()
    test_groth_principal_mode()
    test_random_checks_repeat_without_a_seed()
    print("cli: ok")
