"""Train a small de-occlusion network and inspect the held-out gain.

Uses a reduced config (120 training samples, 12+3 epochs at 64x64) so the
demo finishes in a few minutes on one core; the acceptance suite runs the
full 200-sample 20+5-epoch schedule and reaches a larger gain.
"""

import time
from pathlib import Path

import numpy as np

from deocc import build_dataset, fileio, generate_synthetic_model, psnr
from deocc.gan import (ArchDescriptor, LossWeights, TrainConfig, deocclude,
                       init_networks, train)
from deocc.occlusions import load_sample

out_dir = Path(__file__).parent / "output" / "04"

model = generate_synthetic_model(seed=1)
manifest = build_dataset(None, model, out_dir / "sprites", out_dir / "dataset",
                         (120, 12), seed=5, resolution=64)

params = init_networks(ArchDescriptor(resolution=64), seed=0)
cfg = TrainConfig(stage1_epochs=12, stage2_epochs=3, rng_seed=0, checkpoint_interval=3)
t0 = time.time()
params, rows = train(params, manifest, cfg, LossWeights(), out_dir / "train_out")
print(f"trained {len(rows)} epochs in {time.time() - t0:.0f} s")
print(f"L_gen: epoch 1 {rows[0]['L_gen']:.4f} -> last stage-1 epoch "
      f"{rows[cfg.stage1_epochs - 1]['L_gen']:.4f}")

gains = []
for i, rec in enumerate(manifest.split("test")):
    s = load_sample(manifest, rec)
    out = deocclude(params, s.occluded, s.synthesis)
    gains.append(psnr(out, s.ground_truth) - psnr(s.occluded, s.ground_truth))
    if i < 3:
        fileio.save_image(s.occluded, out_dir / f"test{i}_input.png")
        fileio.save_image(out, out_dir / f"test{i}_deoccluded.png")
        fileio.save_image(s.ground_truth, out_dir / f"test{i}_truth.png")
print(f"held-out PSNR gain: {np.mean(gains):+.2f} dB over {len(gains)} samples")
print(f"checkpoint and sample triptychs under {out_dir}")
