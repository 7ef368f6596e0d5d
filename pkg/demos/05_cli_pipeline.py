"""End-to-end CLI pipeline: generate, remove, test, experiment, plot.

Everything in this demo shells out to the installed command line, so it
doubles as a smoke test of the text formats.  The final plotting step runs
only if the frontend package has been built (frontend/dist/cli.js).

Run from the repository root:

    python3 demos/05_cli_pipeline.py
"""

import pathlib
import shutil
import subprocess
import sys
import tempfile

ROOT = pathlib.Path(__file__).resolve().parent.parent


def run(args, **kwargs):
    print(f"$ {' '.join(str(a) for a in args)}")
    proc = subprocess.run([str(a) for a in args], capture_output=True,
                          text=True, **kwargs)
    sys.stdout.write("\n".join("  " + l for l in proc.stdout.splitlines()) + "\n")
    if proc.returncode not in (0, 1):
        sys.stderr.write(proc.stderr)
        raise SystemExit(proc.returncode)
    return proc


def main() -> None:
    cli = [sys.executable, "-m", "ordertest.cli"]
    with tempfile.TemporaryDirectory() as tmp:
        tmp = pathlib.Path(tmp)
        poset_file = tmp / "host.poset"

        print("# 1. generate a layered host and save its cover relation")
        proc = run(cli + ["gen", "sharp_layered", "--h", "3", "--w", "2",
                          "--eps", "1/2"])
        poset_file.write_text(proc.stdout)

        print("\n# 2. exact 3-chain density of the host")
        run(cli + ["density", "--pattern", "chain:3",
                   "--host", str(poset_file), "--csv"])

        print("\n# 3. remove edges until no 3-chain remains")
        run(cli + ["remove", str(poset_file), "--h", "3", "--gamma", "1/4",
                   "--mode", "rank"])

        print("\n# 4. seeded one-sided test (exit 1 means a chain was found)")
        run(cli + ["test", str(poset_file), "--mode", "subposet", "--h", "3",
                   "--eps", "1/4", "--c", "1.0", "--seed", "7"])

        print("\n# 5. a small experiment grid -> CSV")
        config = tmp / "exp.config"
        config.write_text(
            "experiment = subposet-detection\nseed = 11\ntrials = 200\n"
            "h = 2\nw = 2\neps = 1/2\nc = 1.0\nc = 2.0\n"
        )
        csv_out = tmp / "detection.csv"
        run(cli + ["experiment", str(config), "-o", str(csv_out)])
        print("\n".join("  " + l for l in csv_out.read_text().splitlines()))

        frontend = ROOT / "frontend" / "dist" / "cli.js"
        if frontend.is_file() and shutil.which("node"):
            print("\n# 6. render the detection curve from the CSV")
            svg_out = tmp / "detection.svg"
            run(["node", frontend, "--csv", csv_out,
                 "--kind", "detection-curve", "--out", svg_out])
            print(f"  wrote {svg_out.stat().st_size} bytes of SVG")
        else:
            print("\n# 6. (skipped: frontend not built; run `npm run build` "
                  "in frontend/)")


if __name__ == "__main__":
    main()
