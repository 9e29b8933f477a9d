#!/usr/bin/env python3
"""Regenerates the shipped toy datasets. Run from the repo root:

    python3 data/make_toy_data.py
"""
import csv
import datetime
import random

random.seed(20240611)

N_PERSONS = 120
ROUNDS = ["BL", "FUP"]

rows = []
for p in range(N_PERSONS):
    uid = f"P{p + 1:04d}"
    age = random.randint(12, 25)
    sex = random.choices(["F", "M", "X"], weights=[48, 48, 4])[0]
    grp = "intervention" if p % 2 == 0 else "control"
    severity = random.gauss(0.0, 1.0)
    bl_date = datetime.date(2023, 1, 1) + datetime.timedelta(days=random.randint(0, 180))
    fup_gap = random.randint(150, 210)
    for r, rnd in enumerate(ROUNDS):
        drift = severity - 0.3 * r + random.gauss(0.0, 0.4)
        k6 = round(12 + 4.5 * drift + random.gauss(0.0, 2.0))
        k6 = max(0, min(24, k6))
        items = []
        for j in range(6):
            v = round(3 + 0.9 * drift + random.gauss(0.0, 0.8))
            items.append(max(1, min(5, v)))
        date = bl_date if r == 0 else bl_date + datetime.timedelta(days=fup_gap)
        row = {
            "uid": uid,
            "round": rnd,
            "grp": grp,
            "assess_date": date.isoformat(),
            "age": age + r if age < 25 and r == 1 and random.random() < 0.4 else age,
            "sex": sex,
            "k6": k6,
        }
        for j, v in enumerate(items):
            row[f"i{j + 1}"] = v
        rows.append(row)

# sprinkle some missing values outside the uid/round/grp/date columns
missable = ["k6", "i1", "i2", "i3", "i4", "i5", "i6"]
for row in rows:
    for var in missable:
        if random.random() < 0.02:
            row[var] = "NA"

header = ["uid", "round", "grp", "assess_date", "age", "sex", "k6",
          "i1", "i2", "i3", "i4", "i5", "i6"]

with open("data/toy_records.csv", "w", newline="") as f:
    w = csv.DictWriter(f, fieldnames=header, lineterminator="\n")
    w.writeheader()
    w.writerows(rows)

# corrupted copy: 12 planted violations, one per row, spread across variables
violations = [
    (3, "age", "26"),      # above max
    (17, "age", "11"),     # below min
    (31, "k6", "25"),      # above max
    (45, "k6", "-1"),      # below min
    (59, "i1", "0"),       # below min
    (73, "i2", "6"),       # above max
    (87, "sex", "Q"),      # outside allowed set
    (101, "round", "XX"),  # outside allowed set
    (115, "grp", "other"), # outside allowed set
    (129, "i3", "99"),     # far above max
    (143, "k6", "100"),    # far above max
    (157, "age", "200"),   # far above max
]
bad = [dict(r) for r in rows]
for idx, var, val in violations:
    bad[idx][var] = val
with open("data/toy_records_bad.csv", "w", newline="") as f:
    w = csv.DictWriter(f, fieldnames=header, lineterminator="\n")
    w.writeheader()
    w.writerows(bad)

with open("data/toy_violations.csv", "w", newline="") as f:
    w = csv.writer(f, lineterminator="\n")
    w.writerow(["row", "variable", "value"])
    for idx, var, val in violations:
        w.writerow([idx + 1, var, val])  # 1-based data row

print(f"wrote {len(rows)} rows")
