import time, json, torch
torch.set_num_threads(1)
from relightkit.dataset import Dataset
from relightkit.config import RunConfig, TrainOptions
from relightkit import harness

ds = Dataset.open("/root/pkg/.artifacts/calib_ds")
rc = RunConfig(dataset=ds.config, train=TrainOptions(pretrain_steps=3000, finetune_steps=3000))

t0 = time.time()
train_records, _ = ds.split()
data = harness.prepare_pairs(ds, train_records, rc.mpli, rc.model.spatial_factor, with_lights=True)
print(f"[{time.time()-t0:7.1f}s] prepared {len(data)} pairs", flush=True)

t0 = time.time()
base = harness.pretrain_base(ds, rc, seed=1, data=data)
print(f"[{time.time()-t0:7.1f}s] pretrain done; curve tail:", json.dumps(base.hparams["loss_curve"][-3:]), flush=True)
base.save("/root/pkg/.artifacts/calib3_base")

t0 = time.time()
ft = harness.finetune_relight(base, ds, rc, seed=2, data=data)
print(f"[{time.time()-t0:7.1f}s] finetune done; curve tail:", json.dumps(ft.hparams["loss_curve"][-3:]), flush=True)
ft.save("/root/pkg/.artifacts/calib3_ft")
print("adapter gain:", float(ft.model.adapter.gain.detach()), "-> injection", float(ft.model.adapter.injection_gain.detach()), flush=True)

with torch.no_grad():
    for tv in [1.0, 0.75, 0.5, 0.25]:
        g = ft.model.gates(ft.model.time_embed(torch.tensor([tv])))
        print(f"gate t={tv:.2f}: A={g[0,0]:+.4f} B={g[0,1]:+.4f}", flush=True)

del data
import numpy as np
_, held = ds.split()
for steps in (1, 2, 4, 8):
    gen = harness.DitGenerator(ft.model, sample_steps=steps)
    dh = harness.prepare_pairs(ds, held[:12], rc.mpli, 4, with_lights=True)
    latent = gen.generate(dh.source, dh.light, 1234)
    ps, bs = [], []
    for i, r in enumerate(held[:12]):
        v = harness.latent_to_video(latent[i].numpy(), 4, 17)
        src, tgt = ds.load_videos(r)
        ps.append(harness.psnr(v, tgt)); bs.append(harness.psnr(src, tgt))
    print(f"steps={steps}: psnr {np.mean(ps):6.2f} baseline {np.mean(bs):6.2f} gain {np.mean(ps)-np.mean(bs):+6.2f}", flush=True)

gen = harness.DitGenerator(ft.model, sample_steps=4)
t0 = time.time()
report = harness.evaluate_controllability(gen, ds, rc, out_dir="/root/pkg/.artifacts/calib3_eval")
print(f"[{time.time()-t0:7.1f}s] eval done", flush=True)
print("SUMMARY:", json.dumps(report["summary"], indent=1), flush=True)
