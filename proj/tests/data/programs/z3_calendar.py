import json
from z3 import Int, Optimize, And, Or, sat

WORK_START = 9 * 60
WORK_END = 17 * 60
DURATION = 60
busy = [(9 * 60, 10 * 60)]

start = Int("start")
opt = Optimize()
opt.add(start >= WORK_START, start + DURATION <= WORK_END)
for b_start, b_end in busy:
    opt.add(Or(start + DURATION <= b_start, start >= b_end))
opt.minimize(start)

if opt.check() == sat:
    s = opt.model()[start].as_long()
    e = s + DURATION
    print(json.dumps({
        "start": {"day": "Monday", "time": "%02d:%02d" % (s // 60, s % 60)},
        "end": {"day": "Monday", "time": "%02d:%02d" % (e // 60, e % 60)},
    }))
else:
    print("No solution")
