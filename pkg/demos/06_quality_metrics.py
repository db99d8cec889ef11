"""PSNR / SSIM behavior on known cases and a category report skeleton.

Shows the closed-form PSNR values, SSIM's response to increasing noise,
and how occluder classes map onto the report categories.
"""

import numpy as np

from deocc.metrics import (CLASS_TO_CATEGORY, REFERENCE_ROWS, psnr,
                           psnr_masked, ssim)

flat = np.full((32, 32, 3), 0.5)
print(f"identical images        -> PSNR {psnr(flat, flat):.1f} dB (capped), "
      f"SSIM {ssim(flat + 0.0, flat):.3f}")
print(f"uniform 1/255 offset    -> PSNR {psnr(flat, flat + 1 / 255):.4f} dB "
      f"(= 20 log10 255)")
check = np.zeros((32, 32, 3))
check[::2, ::2] = 1.0
check[1::2, 1::2] = 1.0
print(f"checkerboard vs black   -> PSNR {psnr(check, np.zeros_like(check)):.4f} dB "
      f"(MSE one half)")

rng = np.random.default_rng(0)
img = rng.random((48, 48, 3)) * 0.6 + 0.2
print("\nnoise amplitude sweep:")
for amp in (0.01, 0.04, 0.16):
    noisy = np.clip(img + rng.normal(0, amp, img.shape), 0, 1)
    mask = np.zeros((48, 48))
    mask[12:36, 12:36] = 1
    print(f"  amp {amp:.2f}: PSNR {psnr(img, noisy):6.2f} dB, "
          f"mask-only {psnr_masked(img, noisy, mask):6.2f} dB, "
          f"SSIM {ssim(img, noisy):.4f}")

print("\noccluder class -> report category:")
for cls, cat in CLASS_TO_CATEGORY.items():
    print(f"  {cls:10s} -> {cat}")
print("\npublished full-scale reference values (context only):")
for name, p, s in REFERENCE_ROWS:
    print(f"  {name:16s} PSNR {p:.4f}  SSIM {s:.4f}")
