"""
From a synthetic scene to the image model's conditioning sequence
=================================================================

Draw one scene, pull the two hands out of the body, put a camera on them
and look at everything the image denoiser gets to see.

Run with ``python demos/hand_conditioning.py``; it takes a few seconds.
"""

import numpy as np
import torch

from handgen.data import render_scene, sample_scene
from handgen.encoding import EncoderConfig, TextHandEncoder, bps_basis, make_cond_batch
from handgen.kinematics import default_rig_set
from handgen.pipeline import CameraConstraints, build_conditioning, extract_hands, sample_camera
from handgen.text import Tokenizer

rigs = default_rig_set()

# a scene is a pose, a caption and a camera, all fixed by one seed
scene = sample_scene(12, rigs=rigs)
print("caption:", scene.caption)
print("state vector:", scene.state.to_flat().shape)

render = render_scene(scene, rigs)
print("image", render.image.shape, "label values", np.unique(render.labels))

# hands in the body frame: 21 joints each plus the skinned hand mesh
hands = extract_hands(scene.state, rigs)
for side, hand in hands.items():
    print(side, "joints", hand.joints.shape, "vertices", hand.vertices.shape)

# a fresh camera that keeps the hands in frame
constraints = CameraConstraints()
pts = np.concatenate([h.joints for h in hands.values()])
intr, pose, tries = sample_camera(pts, constraints, np.random.default_rng(3))
print("camera accepted after", tries, "tries")

cond = build_conditioning(hands, intr, pose, bps_basis(7, 256), 1000, constraints)
for side in cond.visible:
    if cond.visible[side]:
        print(side, "tokens u/v range", cond.tokens[side].min(), cond.tokens[side].max(),
              "| BPS", cond.bps[side].shape, "| 6D rotations", cond.rotations6d[side].shape)
    else:
        print(side, "not visible: the encoder will use its placeholders")

# the encoder turns text plus hands into one sequence of D-dim embeddings
tok = Tokenizer()
enc = TextHandEncoder(EncoderConfig(vocab_size=tok.vocab_size), seed=0).eval()
batch = make_cond_batch(tok.encode_batch([scene.caption]), [cond.features], intr.image_size, 1000)
with torch.no_grad():
    emb, mask, segments = enc(batch)
print("sequence", tuple(emb.shape), "attended positions", int(mask.sum()))
for name in dict.fromkeys(segments):
    print(f"  {name:<10} {segments.count(name)} slots")
