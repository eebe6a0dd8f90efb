"""Inertial response shaping by the emulated inertia constant.

Runs the same ramped under-frequency event for H = 10, 20 and 30 s and
compares the injected inertial energy, the converter frequency slew and the
match against the linearized second-order prediction.  Larger H gives more
inertial energy and a slower converter frequency dip.
"""

import time
from pathlib import Path

import numpy as np
import scipy.signal

from estatcom import get_scenario, inertial_energy, make_inertial_tf, run_scenario

OUT = Path(__file__).parent / "out"
OUT.mkdir(exist_ok=True)

print(f"{'H [s]':>6} {'E_inertial [J]':>15} {'max |df/dt| [Hz/s]':>19} "
      f"{'model NRMSE':>12} {'wall [s]':>9}")
for h in (10, 20, 30):
    cfg = get_scenario(f"fig14-h{h}")
    t0 = time.time()
    log, status = run_scenario(cfg)
    wall = time.time() - t0
    t_dip = [e.t for e in cfg.events if e.kind == "set_grid_frequency"][0]
    t_rest = [e.t for e in cfg.events if e.kind == "set_grid_frequency"][1]
    e_in = inertial_energy(log, (t_dip, t_rest - 0.1))

    sl = log.window_slice(t_dip, t_rest - 0.1)
    rocof = np.max(np.abs(np.gradient(log["f_conv_hz"][sl], log.t[sl])))

    # compare against the linearized response for the same gains
    sl2 = log.window_slice(t_dip - 0.05, t_rest - 0.1)
    tt = log.t[sl2]
    wg = 2 * np.pi * (log["f_grid_hz"][sl2] - 60.0)
    g = make_inertial_tf(cfg.p_max_eff, cfg.gains.k_p, cfg.gains.k_i)
    _, p_pred, _ = scipy.signal.lsim(scipy.signal.TransferFunction(g.num, g.den),
                                     wg, tt - tt[0])
    base = log.window_slice(t_dip - 0.15, t_dip - 0.001)
    p_sim = log["p_ac_w"][sl2] - np.mean(log["p_ac_w"][base])
    nrmse = np.sqrt(np.mean((p_sim - p_pred) ** 2)) / np.max(np.abs(p_pred))

    log.write_csv(OUT / f"inertia-sweep-h{h}.csv")
    print(f"{h:6d} {e_in:15.1f} {rocof:19.3f} {100 * nrmse:11.1f}% {wall:9.1f}")

print(f"\nCSV files in {OUT} (overlay them with the plotting package)")
