import json, time
import numpy as np
from freqcast.data import SplitSpec, assemble, load_csv
from freqcast.fits import FitsConfig, FitsModel
from freqcast.train import TrainConfig, train_two_stage, evaluate

t0 = time.perf_counter()
frame = load_csv("data/ETTh1.csv", name="etth1")
bundle = assemble(frame, SplitSpec.ett(), seq_len=360, pred_len=96, mode="M")
cfg = FitsConfig(seq_len=360, pred_len=96, base_period=24, harmonic_order=6)
model = FitsModel(cfg, n_channels=7, seed=0)
tc = TrainConfig()
model, hist = train_two_stage(model, bundle, tc)
m = evaluate(model, bundle.test)
out = {"mse": m.mse, "mae": m.mae, "epochs": len(hist), "wall_s": time.perf_counter()-t0,
       "val_tail": [h["val_loss"] for h in hist[-5:]]}
print(json.dumps(out, indent=2))
with open(".calib/crit1.json", "w") as f:
    json.dump({"out": out, "history": hist}, f, indent=2)
