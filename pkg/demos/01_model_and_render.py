"""Generate a synthetic face model and render it from a few viewpoints.

Writes the model file plus shaded renders and silhouette masks under
demos/output/01/.
"""

from pathlib import Path

import numpy as np

from deocc import Coefficients, fileio, generate_synthetic_model, render, save_model
from deocc.fitting import CameraPose
from deocc.morphable import sample_coefficients

out_dir = Path(__file__).parent / "output" / "01"
out_dir.mkdir(parents=True, exist_ok=True)

model = generate_synthetic_model(seed=1, n_grid=24, k_id=16, k_exp=8)
save_model(model, out_dir / "model.txt")
print(f"model: {model.n_vertices} vertices, {model.triangles.shape[0]} triangles, "
      f"{model.k_id}+{model.k_exp} modes")

rng = np.random.default_rng(0)
for i, yaw_deg in enumerate((-45, 0, 45)):
    coeffs = sample_coefficients(model, rng) if i else Coefficients.zeros(model)
    pose = CameraPose(np.array([0.0, np.deg2rad(yaw_deg), 0.0]),
                      (64.0, 64.0), 40.0)
    out = render(model, coeffs, pose, 128, 128)
    fileio.save_image(out.image, out_dir / f"render_yaw{yaw_deg:+d}.png")
    fileio.save_mask(out.mask, out_dir / f"mask_yaw{yaw_deg:+d}.png")
    print(f"yaw {yaw_deg:+d} deg: {int(out.mask.sum())} covered pixels")

print(f"wrote renders to {out_dir}")
