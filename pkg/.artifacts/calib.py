import time, json, torch
torch.set_num_threads(1)
from relightkit.dataset import DatasetConfig, generate_dataset, Dataset
from relightkit.config import RunConfig, TrainOptions
from relightkit import harness

t0 = time.time()
cfg = DatasetConfig()  # desk defaults: 60 scenes x 4 traj x 3 batches = 720 pairs
out = generate_dataset(cfg, seed=11, out_dir="/root/pkg/.artifacts/calib_ds")
print(f"[{time.time()-t0:7.1f}s] dataset: 720 pairs", flush=True)

ds = Dataset.open(out)
rc = RunConfig(dataset=cfg, train=TrainOptions(pretrain_steps=1500, finetune_steps=1500, batch_size=8, log_every=100))

t0 = time.time()
train_records, _ = ds.split()
data = harness.prepare_pairs(ds, train_records, rc.mpli, rc.model.spatial_factor, with_lights=True)
print(f"[{time.time()-t0:7.1f}s] prepared {len(data)} pairs", flush=True)

t0 = time.time()
base = harness.pretrain_base(ds, rc, seed=1, data=data)
print(f"[{time.time()-t0:7.1f}s] pretrain done", flush=True)
print("pretrain curve:", json.dumps(base.hparams["loss_curve"]), flush=True)
base.save("/root/pkg/.artifacts/calib_base")

t0 = time.time()
ft = harness.finetune_relight(base, ds, rc, seed=2, data=data)
print(f"[{time.time()-t0:7.1f}s] finetune done", flush=True)
print("finetune curve:", json.dumps(ft.hparams["loss_curve"]), flush=True)
ft.save("/root/pkg/.artifacts/calib_ft")

del data
gen = harness.DitGenerator(ft.model, sample_steps=32)
t0 = time.time()
report = harness.evaluate_controllability(gen, ds, rc, out_dir="/root/pkg/.artifacts/calib_eval")
print(f"[{time.time()-t0:7.1f}s] eval done", flush=True)
print("SUMMARY:", json.dumps(report["summary"], indent=1), flush=True)
