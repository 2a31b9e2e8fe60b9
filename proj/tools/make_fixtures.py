#!/usr/bin/env python3
"""Generate the test fixtures shipped under tests/fixtures/.

Synthetic "natural-ish" images (smooth shading + shapes + band-limited
texture) for the desk corpus, a 256x256 probe image, and two interop
fixtures encoded with Pillow/libjpeg, which acts as the independent
reference codec. The reference decode of each interop .jpg is stored as
a PPM so tests can compare against it without Pillow installed.

Run from the repository root:  python3 tools/make_fixtures.py
"""

import io
import os
import numpy as np
from PIL import Image

OUT = os.path.join(os.path.dirname(__file__), "..", "tests", "fixtures")


def smooth_field(rng, h, w, modes=6, max_freq=3.0):
    """Sum of random low-frequency cosine modes, roughly in [-1, 1]."""
    yy, xx = np.mgrid[0:h, 0:w].astype(np.float64)
    yy /= h
    xx /= w
    f = np.zeros((h, w))
    for _ in range(modes):
        fy, fx = rng.uniform(-max_freq, max_freq, 2)
        ph = rng.uniform(0, 2 * np.pi)
        amp = rng.uniform(0.3, 1.0)
        f += amp * np.cos(2 * np.pi * (fy * yy + fx * xx) + ph)
    m = np.max(np.abs(f))
    return f / (m + 1e-9)


def bandlimited_noise(rng, h, w, sigma=1.2):
    n = rng.standard_normal((h, w))
    # cheap separable gaussian blur
    k = int(3 * sigma) | 1
    x = np.arange(k) - k // 2
    g = np.exp(-0.5 * (x / sigma) ** 2)
    g /= g.sum()
    n = np.apply_along_axis(lambda r: np.convolve(r, g, mode="same"), 1, n)
    n = np.apply_along_axis(lambda c: np.convolve(c, g, mode="same"), 0, n)
    n /= np.std(n) + 1e-9
    return n


def synth_image(seed, h, w):
    """A colorful synthetic scene: shaded background, crisp shapes, texture."""
    rng = np.random.default_rng(seed)
    img = np.zeros((h, w, 3))
    base = rng.uniform(60, 190, 3)
    for c in range(3):
        img[:, :, c] = base[c] + 55 * smooth_field(rng, h, w)

    yy, xx = np.mgrid[0:h, 0:w]
    # disks and rectangles with hard edges and saturated colors
    for _ in range(rng.integers(4, 8)):
        color = rng.uniform(10, 245, 3)
        if rng.random() < 0.5:
            cy, cx = rng.uniform(0, h), rng.uniform(0, w)
            r = rng.uniform(0.08, 0.28) * min(h, w)
            mask = (yy - cy) ** 2 + (xx - cx) ** 2 < r * r
        else:
            y0, x0 = rng.uniform(0, h * 0.8), rng.uniform(0, w * 0.8)
            y1 = y0 + rng.uniform(0.1, 0.4) * h
            x1 = x0 + rng.uniform(0.1, 0.4) * w
            mask = (yy >= y0) & (yy < y1) & (xx >= x0) & (xx < x1)
        alpha = rng.uniform(0.65, 1.0)
        for c in range(3):
            img[:, :, c] = np.where(mask, (1 - alpha) * img[:, :, c] + alpha * color[c], img[:, :, c])

    # stripes add mid-frequency chroma detail
    ang = rng.uniform(0, np.pi)
    period = rng.uniform(6, 14)
    stripes = np.sin(2 * np.pi * (np.cos(ang) * xx + np.sin(ang) * yy) / period)
    tint = rng.uniform(-28, 28, 3)
    for c in range(3):
        img[:, :, c] += tint[c] * stripes * (0.5 + 0.5 * smooth_field(rng, h, w, 3))

    tex = bandlimited_noise(rng, h, w)
    for c in range(3):
        img[:, :, c] += rng.uniform(4, 9) * tex

    return np.clip(np.round(img), 0, 255).astype(np.uint8)


def write_ppm(path, arr):
    h, w = arr.shape[:2]
    with open(path, "wb") as f:
        f.write(b"P6\n%d %d\n255\n" % (w, h))
        f.write(arr.tobytes())


def main():
    os.makedirs(OUT, exist_ok=True)
    desk = os.path.join(OUT, "desk")
    os.makedirs(desk, exist_ok=True)

    sizes = [(96, 96)] * 6 + [(80, 112), (70, 90)]
    for i, (h, w) in enumerate(sizes):
        write_ppm(os.path.join(desk, "img%d.ppm" % i), synth_image(1000 + i, h, w))

    write_ppm(os.path.join(OUT, "probe256.ppm"), synth_image(77, 256, 256))

    # Interop fixtures: encoded by Pillow/libjpeg (the independent codec),
    # with Pillow's own decode stored alongside as the reference.
    for name, seed, (h, w), q, subs in [
        ("interop_444", 31, (64, 80), 92, 0),
        ("interop_420", 32, (62, 78), 88, 2),
    ]:
        src = synth_image(seed, h, w)
        buf = io.BytesIO()
        Image.fromarray(src).save(buf, format="JPEG", quality=q, subsampling=subs)
        data = buf.getvalue()
        with open(os.path.join(OUT, name + ".jpg"), "wb") as f:
            f.write(data)
        ref = np.asarray(Image.open(io.BytesIO(data)).convert("RGB"))
        write_ppm(os.path.join(OUT, name + "_ref.ppm"), ref)
        print(name, "bytes:", len(data))

    print("fixtures written to", os.path.abspath(OUT))


if __name__ == "__main__":
    main()
