"""Sample-loop kernels for the feedback effects, jitted with numba.

All state is float64 and allocated per call, so every kernel is pure and
bit-deterministic for a given input. fastmath stays off on purpose:
re-association would break the bit-identical re-run guarantee.
"""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True)
def freeverb_wet(x, comb_sizes, comb_feedback, damp, allpass_sizes, allpass_feedback, input_gain):
    """Wet path of a mono Freeverb: parallel damped combs into series allpasses."""
    n = x.shape[0]
    n_combs = comb_sizes.shape[0]
    max_comb = 0
    for c in range(n_combs):
        if comb_sizes[c] > max_comb:
            max_comb = comb_sizes[c]
    comb_buf = np.zeros((n_combs, max_comb))
    comb_store = np.zeros(n_combs)
    comb_idx = np.zeros(n_combs, dtype=np.int64)

    n_aps = allpass_sizes.shape[0]
    max_ap = 0
    for a in range(n_aps):
        if allpass_sizes[a] > max_ap:
            max_ap = allpass_sizes[a]
    ap_buf = np.zeros((n_aps, max_ap))
    ap_idx = np.zeros(n_aps, dtype=np.int64)

    out = np.empty(n)
    damp1 = damp
    damp2 = 1.0 - damp
    for i in range(n):
        inp = x[i] * input_gain
        acc = 0.0
        for c in range(n_combs):
            j = comb_idx[c]
            delayed = comb_buf[c, j]
            acc += delayed
            comb_store[c] = delayed * damp2 + comb_store[c] * damp1
            comb_buf[c, j] = inp + comb_store[c] * comb_feedback
            j += 1
            if j >= comb_sizes[c]:
                j = 0
            comb_idx[c] = j
        s = acc
        for a in range(n_aps):
            j = ap_idx[a]
            buffered = ap_buf[a, j]
            ap_out = -s + buffered
            ap_buf[a, j] = s + buffered * allpass_feedback
            j += 1
            if j >= allpass_sizes[a]:
                j = 0
            ap_idx[a] = j
            s = ap_out
        out[i] = s
    return out


@njit(cache=True)
def chorus_process(x, sr, rate_hz, depth, centre_delay_samples, feedback, mix):
    """Modulated delay line with linear interpolation and feedback into the line."""
    n = x.shape[0]
    line = np.zeros(n)
    out = np.empty(n)
    two_pi = 2.0 * np.pi
    for i in range(n):
        tau = centre_delay_samples * (1.0 + depth * np.sin(two_pi * rate_hz * i / sr))
        read_pos = i - tau
        if read_pos < 0.0:
            tap = 0.0
        else:
            if read_pos > i - 1:
                read_pos = i - 1.0
            i0 = int(np.floor(read_pos))
            frac = read_pos - i0
            upper = line[i0 + 1] if i0 + 1 < i else 0.0
            tap = line[i0] * (1.0 - frac) + upper * frac
        line[i] = x[i] + feedback * tap
        out[i] = (1.0 - mix) * x[i] + mix * tap
    return out


@njit(cache=True)
def phaser_process(x, sr, rate_hz, depth, centre_hz, feedback, mix):
    """Four cascaded first-order allpasses with a swept centre and global feedback."""
    n = x.shape[0]
    out = np.empty(n)
    x1 = np.zeros(4)
    y1 = np.zeros(4)
    fb_out = 0.0
    two_pi = 2.0 * np.pi
    fc_cap = 0.45 * sr
    for i in range(n):
        fc = centre_hz * 2.0 ** (depth * np.sin(two_pi * rate_hz * i / sr))
        if fc > fc_cap:
            fc = fc_cap
        elif fc < 1.0:
            fc = 1.0
        t = np.tan(np.pi * fc / sr)
        c = (t - 1.0) / (t + 1.0)
        s = x[i] + feedback * fb_out
        for k in range(4):
            ap = c * s + x1[k] - c * y1[k]
            x1[k] = s
            y1[k] = ap
            s = ap
        fb_out = s
        out[i] = (1.0 - mix) * x[i] + mix * s
    return out
