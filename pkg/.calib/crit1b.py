"""Criterion 1 probe with the 20-month ETT trim (first 14400 rows)."""
import json
import time
import numpy as np
from dataclasses import replace
from freqcast.data import load_csv, assemble, SplitSpec
from freqcast.train import TrainConfig, train_two_stage, evaluate, build_model

frame = load_csv("data/ETTh1.csv")
frame = replace(frame, values=frame.values[:14400],
                timestamps=frame.timestamps[:14400])
bundle = assemble(frame, SplitSpec.ett(), seq_len=360, pred_len=96, mode="M")
cfg = dict(seq_len=360, pred_len=96, base_period=24, harmonic_order=6,
           variant="plain", channel_mode="shared")
model = build_model("fits", cfg, bundle.train.inputs.shape[1], seed=0,
                    dtype=np.float64)
tc = TrainConfig()
t0 = time.time()
hist = train_two_stage(model, bundle, tc)
m = evaluate(model, bundle.test, batch_size=256)
out = dict(mse=m.mse, mae=m.mae, epochs=len(hist), wall_s=time.time() - t0)
print(json.dumps(out, indent=2))
with open(".calib/crit1b.json", "w") as fh:
    json.dump(dict(out=out, history=hist), fh, indent=2)
