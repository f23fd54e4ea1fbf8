"""Single-seed probe of the seed-study arms: plain vs deep at depths 2 and 3."""
import json
import time
import numpy as np
from dataclasses import replace
from freqcast.data import load_csv, assemble, SplitSpec
from freqcast.train import TrainConfig, train_two_stage, evaluate, build_model

frame = load_csv("data/ETTh1.csv")
frame = replace(frame, values=frame.values[:14400],
                timestamps=frame.timestamps[:14400])
bundle = assemble(frame, SplitSpec.ett(), seq_len=720, pred_len=96, mode="M")
n_ch = bundle.train.inputs.shape[1]
base = dict(seq_len=720, pred_len=96, base_period=24, harmonic_order=6,
            channel_mode="shared")

out = {}
for label, kind, cfg in [
    ("plain", "fits", dict(base)),
    ("deep_d2", "deep_modrelu", dict(base, depth=2, hidden=128)),
    ("deep_d3", "deep_modrelu", dict(base, depth=3, hidden=128)),
]:
    t0 = time.time()
    model = build_model(kind, cfg, n_ch, seed=0, dtype=np.float64)
    _, hist = train_two_stage(model, bundle, TrainConfig(seed=0))
    mse = evaluate(model, bundle.test, batch_size=256).mse
    out[label] = dict(mse=mse, epochs=len(hist), wall_s=round(time.time() - t0, 1))
    print(label, json.dumps(out[label]))
    with open(".calib/crit6_probe.json", "w") as fh:
        json.dump(out, fh, indent=2)
