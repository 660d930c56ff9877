"""
End-to-end survey workflow through the CLI
==========================================

Writes the bundled nine-group quality survey to CSV, ranks it with two
depth methods, and renders the membership functions as an SVG colored by
rank.  Everything below shells through the same entry point as the
``fuzzydepth`` console command.
"""

from pathlib import Path

from fuzzydepth import emit_dataset, trees_like_records
from fuzzydepth.cli import main

out = Path(__file__).parent / "output"
out.mkdir(exist_ok=True)

csv_path = out / "survey.csv"
csv_path.write_text(emit_dataset(trees_like_records()), encoding="utf-8")
print(f"dataset -> {csv_path}")
print(csv_path.read_text(encoding="utf-8"))

print("projection-depth ranking (console table):")
main(["depth", "--input", str(csv_path), "--method", "projection"])

print("\nsame ranking as CSV, natural depth r=1:")
main(["depth", "--input", str(csv_path), "--method", "natural", "--r", "1", "--format", "csv"])

print("\nlocation depth needs a theta:")
main(
    [
        "depth",
        "--input",
        str(csv_path),
        "--method",
        "location",
        "--r",
        "2",
        "--theta",
        "1",
        "--format",
        "json",
    ]
)

svg_path = out / "survey.svg"
main(["plot", "--input", str(csv_path), "--method", "projection", "--output", str(svg_path)])

print("\naxiom suite, the short way (exit code 0 means all verdicts as expected):")
code = main(["verify", "--suite", "p1"])
print("exit code:", code)
