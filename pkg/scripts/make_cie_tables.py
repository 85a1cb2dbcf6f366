#!/usr/bin/env python3
"""Generate the bundled CIE 1931 data tables (V, xbar, ybar, zbar CSVs).

The color matching functions are built from the multi-lobe piecewise
Gaussian fits of Wyman, Sloan & Shirley (JCGT 2013), which reproduce the
2-degree standard observer to about 1% of peak, then post-processed so the
bundled tables satisfy the package contracts exactly:

  * ybar has its maximum of exactly 1.0 at 555 nm (grid point),
  * the photopic luminosity table V equals ybar,
  * far tails are tapered below 1e-4 (the analytic fits overshoot there),
  * xbar and zbar are rescaled so all three CMFs share the same integral,
    making the equal-energy spectrum map to (1/3, 1/3) at trapezoid level.

Run from the repo root; writes into src/vlcopt/data/.
"""

import pathlib

import numpy as np

OUT_DIR = pathlib.Path(__file__).resolve().parents[1] / "src" / "vlcopt" / "data"

GRID = np.arange(380.0, 831.0, 1.0)


def lobe(lam, scale, mu, sigma_lo, sigma_hi):
    sigma = np.where(lam < mu, sigma_lo, sigma_hi)
    return scale * np.exp(-0.5 * ((lam - mu) / sigma) ** 2)


def cmf_raw(lam):
    x = (
        lobe(lam, 1.056, 599.8, 37.9, 31.0)
        + lobe(lam, 0.362, 442.0, 16.0, 26.7)
        + lobe(lam, -0.065, 501.1, 20.4, 26.2)
    )
    y = lobe(lam, 0.821, 568.8, 46.9, 40.5) + lobe(lam, 0.286, 530.9, 16.3, 31.1)
    z = lobe(lam, 1.217, 437.0, 11.8, 36.0) + lobe(lam, 0.681, 459.0, 26.0, 13.8)
    return x, y, z


def tail_taper(lam, center=555.0, start=130.0, width=25.0):
    """Smooth (C1) attenuation beyond +-start nm from center."""
    excess = np.maximum(0.0, np.abs(lam - center) - start)
    return np.exp(-((excess / width) ** 2))


def main():
    # Locate the ybar peak of the raw fit so the tables can be shifted to
    # put the photopic maximum exactly on the 555 nm grid point.
    fine = np.arange(540.0, 570.0, 1e-4)
    _, y_fine, _ = cmf_raw(fine)
    peak = fine[np.argmax(y_fine)]
    shift = 555.0 - peak

    lam_eval = GRID - shift
    xb, yb, zb = cmf_raw(lam_eval)

    taper = tail_taper(GRID)
    xb = np.clip(xb * taper, 0.0, None)
    yb = np.clip(yb * taper, 0.0, None)
    zb = np.clip(zb * taper, 0.0, None)

    # Exact unit peak at 555 nm.
    i555 = int(np.where(GRID == 555.0)[0][0])
    yb = yb / yb[i555]
    assert np.argmax(yb) == i555

    # Common integral => equal-energy stimulus lands on (1/3, 1/3).
    iy = np.trapezoid(yb, GRID)
    xb *= iy / np.trapezoid(xb, GRID)
    zb *= iy / np.trapezoid(zb, GRID)

    # Drop sub-noise tail values so the CSVs stay tidy.
    for arr in (xb, yb, zb):
        arr[arr < 1e-12] = 0.0

    assert yb[0] <= 1e-4 and yb[-1] <= 1e-4

    OUT_DIR.mkdir(parents=True, exist_ok=True)
    tables = {
        "cie_photopic_v.csv": yb,
        "cie_xbar.csv": xb,
        "cie_ybar.csv": yb,
        "cie_zbar.csv": zb,
    }
    for name, values in tables.items():
        path = OUT_DIR / name
        with open(path, "w", newline="\n") as fh:
            fh.write("wavelength_nm,value\n")
            for lam, val in zip(GRID, values):
                fh.write(f"{lam:.0f},{float(val)!r}\n")
        print(f"wrote {path} ({len(values)} rows)")


if __name__ == "__main__":
    main()
