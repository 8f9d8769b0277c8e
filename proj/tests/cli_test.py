"""End-to-end checks of the abnet command-line tool: reports, exit codes, input handling."""
import json
import os
import subprocess
import sys
import unittest

ABNET = os.environ["ABNET_BIN"]
DATA = os.environ["ABNET_DATA"]


def run(*args, stdin=None):
    proc = subprocess.run([ABNET, *args], input=stdin, capture_output=True, text=True, timeout=120)
    return proc.returncode, proc.stdout, proc.stderr


def data(name):
    return os.path.join(DATA, name)


def structured(*args, stdin=None):
    code, out, err = run(*args, "--format", "structured", stdin=stdin)
    return code, (json.loads(out) if out else None), err


class AnalyzeTest(unittest.TestCase):
    def test_example_report(self):
        code, r, _ = structured("analyze", "--input", data("nonrectangular.json"))
        self.assertEqual(code, 0)
        self.assertEqual(r["det_laplacian"], 4)
        self.assertEqual(r["iota"], 2)
        self.assertEqual(r["rec_count"], 2)
        self.assertEqual(r["critical_group"], [2])
        self.assertEqual(r["laplacian_cokernel"], [2, 2])
        self.assertEqual(r["laplacian"], [[2, 0, 0], [0, 2, 0], [-3, -1, 1]])

    def test_triangle_and_sink(self):
        self.assertEqual(structured("analyze", "--input", data("triangle_sandpile.json"))[1]["critical_group"], [3])
        code, r, _ = structured("analyze", "--input", data("sink.json"))
        self.assertEqual((code, r["critical_group"], r["rec_count"]), (0, [], 1))

    def test_stdin_input(self):
        with open(data("example_family.json")) as f:
            code, r, _ = structured("analyze", stdin=f.read())
        self.assertEqual((code, r["critical_group"]), (0, [2]))

    def test_non_halting_exit_code(self):
        code, r, err = structured("analyze", "--input", data("two_cycle_diverging.json"))
        self.assertEqual(code, 3)
        self.assertFalse(r["halting"]["halts"])
        self.assertIn("non-halting", err)

    def test_text_format(self):
        code, out, _ = run("analyze", "--input", data("nonrectangular.json"))
        self.assertEqual(code, 0)
        self.assertIn("critical_group: [2]\n", out)
        self.assertIn("  [3/2, 1/2, 0]\n", out)


class SimulateTest(unittest.TestCase):
    def test_examples(self):
        code, r, _ = structured("simulate", "--input", data("nonrectangular.json"))
        self.assertEqual(r["odometer"], {"a": 0, "b": 0, "c": 0})
        code, r, _ = structured("simulate", "--input", data("nonrectangular.json"), "--pending", "a=2,b=2")
        self.assertEqual((code, r["odometer"], r["final_state"]), (0, {"a": 2, "b": 2, "c": 4}, {"i": "0", "j": "0"}))
        code, r, _ = structured("simulate", "--input", data("triangle_sandpile.json"), "--pending", "u=1",
                                "--state", "u=1,v=1")
        self.assertEqual(r["odometer"], {"u": 2, "v": 1, "s": 2})

    def test_budget_exit_code(self):
        code, r, _ = structured("simulate", "--input", data("two_cycle_diverging.json"), "--pending", "x=1",
                                "--budget", "30")
        self.assertEqual(code, 4)
        self.assertEqual(r["rounds"], 30)


class RecurrenceTest(unittest.TestCase):
    def test_examples(self):
        code, r, _ = structured("recurrent", "--input", data("nonrectangular.json"))
        self.assertEqual((code, r["recurrent"], r["odometer"]), (0, True, {"a": 2, "b": 2, "c": 4}))
        self.assertFalse(structured("recurrent", "--input", data("triangle_sandpile.json"))[1]["recurrent"])
        r = structured("recurrent", "--input", data("triangle_sandpile.json"), "--state", "u=1,v=1")[1]
        self.assertTrue(r["recurrent"])

    def test_burning(self):
        code, r, _ = structured("burning", "--input", data("nonrectangular.json"))
        self.assertEqual(r["certificate"]["element"], {"a": 2, "b": 2, "c": 0})
        code, r, _ = structured("burning", "--input", data("triangle_sandpile.json"), "--refine-cycles")
        self.assertEqual((code, r["certificate"]["refined"]), (0, True))
        self.assertEqual(run("burning", "--input", data("two_cycle_diverging.json"))[0], 3)


class OracleAndMarkovTest(unittest.TestCase):
    def test_oracle_counts(self):
        for name, count in [("triangle_sandpile.json", 3), ("nonrectangular.json", 2), ("sink.json", 1)]:
            code, r, _ = structured("oracle", "--input", data(name))
            self.assertEqual((code, len(r["recurrent_states"])), (0, count), name)
            self.assertTrue(all(v for v in r["cross_checks"].values() if isinstance(v, bool)))

    def test_markov(self):
        code, r, _ = structured("markov", "--input", data("triangle_sandpile.json"), "--steps", "60000",
                                "--seed", "3")
        self.assertEqual(code, 0)
        for f in r["frequencies"]:
            self.assertAlmostEqual(f["frequency"], 1 / 3, delta=0.02)
        code, r, _ = structured("markov", "--input", data("nonrectangular.json"), "--alpha", "b=1", "--steps", "5")
        self.assertEqual([s["i"] for s in r["trajectory"]], ["0", "1", "0", "1", "0", "1"])
        code, r, _ = structured("markov", "--input", data("nonrectangular.json"), "--steps", "0")
        self.assertEqual(len(r["trajectory"]), 1)

    def test_determinism(self):
        args = ("markov", "--input", data("triangle_sandpile.json"), "--steps", "5000", "--seed", "9")
        self.assertEqual(run(*args)[1], run(*args)[1])
        self.assertNotEqual(run(*args)[1], run(*args[:-1], "10")[1])


class DocumentTest(unittest.TestCase):
    def test_sandpilize_round_trip(self):
        code, out, _ = run("sandpilize", "--input", data("nonrectangular.json"), "--format", "structured")
        self.assertEqual(code, 0)
        code, r, _ = structured("analyze", stdin=out)
        self.assertEqual((code, r["laplacian"]), (0, [[2, 0, 0], [0, 2, 0], [-3, -1, 1]]))
        self.assertTrue(r["rectangular"])

    def test_validation_exit_codes(self):
        self.assertEqual(run("analyze", stdin="not json")[0], 2)
        self.assertEqual(run("analyze", "--input", data("missing.json"))[0], 2)
        self.assertEqual(run("analyze", "--format", "yaml", "--input", data("sink.json"))[0], 2)
        self.assertEqual(run()[0], 2)
        bad = '{"format_version": 1, "vertices": [{"name": "p", "states": 2, "letters": ["a", "b"],' \
              ' "transition": {"a": [1, 0], "b": [0, 0]}}]}'
        code, _, err = run("analyze", stdin=bad)
        self.assertEqual(code, 2)
        self.assertIn("vertex p", err)
        self.assertEqual(run("simulate", "--input", data("sink.json"), "--pending", "nope=1")[0], 2)


if __name__ == "__main__":
    unittest.main(argv=sys.argv[:1], verbosity=2)
