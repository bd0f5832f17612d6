"""
A whole run through the command line, at the smallest possible scale
====================================================================

Synthesise data, train the three models for a handful of steps, generate a
trace and score it. The numbers mean nothing at this size; the point is
the shape of a run and the files it leaves behind.

Run with ``python demos/tiny_end_to_end.py [work_dir]``.
"""

import json
import sys
import tempfile
from pathlib import Path

from handgen.cli import run_command

work = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(tempfile.mkdtemp(prefix="handgen-"))
cfg = work / "tiny.toml"
work.mkdir(parents=True, exist_ok=True)
cfg.write_text("""
[data]
bps_count = 32
[t2h]
model_dim = 16
n_layers = 1
n_heads = 2
ff_dim = 32
diffusion_steps = 100
batch_size = 16
[ae]
widths = [8, 16]
latent_channels = 2
batch_size = 16
[th2i]
embed_dim = 16
mlp_hidden = 16
encoder_heads = 2
unet_widths = [8, 16]
unet_heads = 2
time_dim = 16
diffusion_steps = 100
plms_steps = 10
batch_size = 8
[eval]
kid_subsets = 2
kid_subset_size = 8
""")


def run(*argv):
    code = run_command([argv[0], "--config", str(cfg), *argv[1:]])
    if code:
        sys.exit(f"{argv[0]} exited with {code}")


run("make-data", "--seed", "1", "--count", "48", "--out", str(work / "data"))
run("train-t2h", "--data", str(work / "data"), "--out", str(work / "t2h.ckpt"), "--steps", "50")
run("train-ae", "--data", str(work / "data"), "--out", str(work / "ae.ckpt"), "--steps", "50")
run("train-th2i", "--data", str(work / "data"), "--ae-ckpt", str(work / "ae.ckpt"),
    "--out", str(work / "th2i.ckpt"), "--steps", "50")

prompts = ["a person waving with the right hand", "a person making a fist with both hands",
           "a person pointing with the left hand"]
for i, prompt in enumerate(prompts):
    run("generate", "--prompt", prompt, "--seed", str(i), "--out-dir", str(work / "gen" / f"{i:02d}"),
        "--t2h-ckpt", str(work / "t2h.ckpt"), "--th2i-ckpt", str(work / "th2i.ckpt"))

# each trace directory holds the image, every intermediate tensor and a manifest
print(sorted(p.name for p in (work / "gen" / "00").iterdir()))
print(json.dumps(json.loads((work / "gen" / "00" / "manifest.json").read_text())["stage_seeds"], indent=1))

run("eval", "--generated", str(work / "gen"), "--reference", str(work / "data"),
    "--ae-ckpt", str(work / "ae.ckpt"), "--out", str(work / "metrics.json"))
print("outputs under", work)
