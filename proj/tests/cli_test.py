"""End-to-end checks of the qwb command line: exit codes, report shape, determinism."""
import json
import os
import subprocess
import sys
import tempfile
import unittest

import jsonschema

BINARY = sys.argv[1] if len(sys.argv) > 1 else "build/tools/qwb"
ROOT = sys.argv[2] if len(sys.argv) > 2 else "."
del sys.argv[1:]

POINT = "-33/23,-22/23,-33/23,11/23"  # a rational point on the bundled quartic


def load(name):
    with open(os.path.join(ROOT, name)) as f:
        return json.load(f)


REPORT_SCHEMA = load("schemas/report.schema.json")


def run(*args):
    proc = subprocess.run([BINARY, *args], capture_output=True, text=True, timeout=300)
    body = json.loads(proc.stdout) if proc.stdout.strip() else None
    return proc.returncode, body, proc.stderr


def without_timing(report):
    report = dict(report)
    report.pop("timing", None)
    return report


class Reports(unittest.TestCase):
    def check(self, args, code):
        rc, body, err = run(*args)
        self.assertEqual(rc, code, msg=err)
        jsonschema.validate(body, REPORT_SCHEMA)
        return body

    def test_genericity(self):
        body = self.check(["genericity"], 0)
        self.assertTrue(body["passed"])
        self.assertEqual(len(self.check(["lines"], 0)["results"]["lines"]), 24)

    def test_genericity_failures(self):
        for name, failure in [("rank2_quartic.json", "rank"), ("no_vertex_quartic.json", "vertex")]:
            body = self.check(["genericity", "--file", os.path.join(ROOT, "data", name)], 1)
            self.assertIn(failure, body["results"]["failures"])
        self.check(["genericity", "--file", os.path.join(ROOT, "data", "degenerate_triple_quartic.json")], 1)

    def test_involutions(self):
        body = self.check(["tau0", "--point=" + POINT], 0)
        self.assertEqual(body["results"]["track"], "exact")
        image = ",".join(body["results"]["image"])
        back = self.check(["tau0", "--point=" + image], 0)
        self.assertEqual(back["results"]["image"], POINT.split(","))
        self.check(["tau-line", "--line", "3", "--point=" + POINT], 0)

    def test_lattice_commands(self):
        self.assertEqual(self.check(["word", "--reduce", "3,3"], 0)["results"]["reduced"], [])
        self.assertEqual(self.check(["word", "--reduce", "0,5,5,0,7"], 0)["results"]["reduced"], [7])
        self.check(["pic", "--state", "7,3"], 0)
        self.check(["untwist", "--state", "13,17"], 0)

    def test_scans(self):
        for form in ["long_chain", "b", "a", "pair_sum"]:
            body = self.check(["scan", "--form", form, "--max", "200"], 0)
            self.assertTrue(body["passed"], msg=form)

    def test_graph_pipeline(self):
        body = self.check(["graph", "--file", os.path.join(ROOT, "data", "sample_graph.json"), "--pipeline"], 0)
        self.assertEqual(body["results"]["pipeline"]["outcome"], "contradiction")
        self.assertEqual(body["results"]["pipeline"]["deciding_step"], "line_component")

    def test_determinism(self):
        a = self.check(["--seed", "4", "pipeline", "--random", "400"], 0)
        b = self.check(["--seed", "4", "pipeline", "--random", "400"], 0)
        c = self.check(["--seed", "4", "pipeline", "--random", "400", "--serial"], 0)
        self.assertEqual(without_timing(a), without_timing(b))
        self.assertEqual(a["results"], c["results"])

    def test_json_file(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "out.json")
            rc, body, _ = run("--json", path, "word", "--local-max", "1,5,3")
            self.assertEqual(rc, 0)
            with open(path) as f:
                self.assertEqual(without_timing(json.load(f)), without_timing(body))

    def test_input_errors(self):
        rc, body, _ = run("tau0", "--point=1,1,1,1")
        self.assertEqual(rc, 2)
        jsonschema.validate(body, REPORT_SCHEMA)
        self.assertEqual(body["error"], "input")
        rc, _, _ = run("graph", "--file", os.path.join(ROOT, "data", "missing.json"))
        self.assertEqual(rc, 2)
        rc, _, _ = run("no-such-command")
        self.assertEqual(rc, 2)
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "config.json")
            with open(path, "w") as f:
                json.dump({"tolerance": 1e-3, "separation": 1e-6}, f)
            rc, _, _ = run("--config", path, "genericity")
            self.assertEqual(rc, 2)


class Fixtures(unittest.TestCase):
    def test_schemas(self):
        quartic = load("schemas/quartic.schema.json")
        for name in ["bundled_quartic", "degenerate_triple_quartic", "rank2_quartic", "no_vertex_quartic"]:
            jsonschema.validate(load(f"data/{name}.json"), quartic)
        jsonschema.validate(load("data/sample_graph.json"), load("schemas/graph.schema.json"))
        jsonschema.validate(load("data/default_config.json"), load("schemas/config.schema.json"))


if __name__ == "__main__":
    unittest.main(verbosity=2)
