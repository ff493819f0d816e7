#!/usr/bin/env python3
"""Regenerates mini_corpus.tsv, the bundled synthetic fixture.

The corpus is fully hand-specified below (no randomness): 3 pseudo-quartets
(901-1, 901-2, 902) over 2 periods plus a 903 alias that folds into 902,
mixing major/minor segments, pedal spans, 'none' chords and one instance of
every cleaning fault the loader repairs. Running the script also recounts
the corpus independently of the C++ implementation and prints the numbers
pinned in the test suites.
"""

import collections
import os

HEADER = [
    "key_ref", "op", "no", "mov", "measure", "length", "global_key",
    "local_key", "pedal", "numeral", "form", "figbass", "changes",
    "relativeroot", "phraseend",
]

# One chord: (numeral, form, figbass, changes, relativeroot, pedal)
def c(numeral, form="", figbass="", changes="", relativeroot="", pedal=""):
    return (numeral, form, figbass, changes, relativeroot, pedal)


# Segment: (op, no, mov, global_key, local_key_list_or_str, chords, faults)
# faults: dict row_index -> {"global_key": bad value} to plant repairable rows.
SEGMENTS = [
    # --- quartet 901-1 (early), global key F ---
    ("901", "1", "1", "F", "I",
     [c("I"), c("V", "", "65"), c("I"), c("V", "", "43"), c("I", "", "6"),
      c("ii", "", "6"), c("V", "", "7"), c("I"), c("V"), c("I")], {}),
    ("901", "1", "1", "F", "I",
     [c("I"), c("IV"), c("V"), c("I"), c("vi"), c("ii", "", "6"),
      c("V", "", "7"), c("I")], {1: {"global_key": "false"}}),
    ("901", "1", "1", "F", "V",
     [c("I"), c("V", "", "7", "", "IV"), c("IV"), c("V", "", "2"),
      c("I", "", "6"), c("V"), c("I")], {}),
    ("901", "1", "2", "F", "i",
     [c("i"), c("V", "", "65"), c("i"), c("iv"), c("V", "", "7"), c("i"),
      c("V"), c("i")], {}),
    ("901", "1", "2", "F", "i",
     [c("i"), c("VI"), c("iv", "", "6"), c("V", "", "7"), c("i"), c("V")], {}),
    ("901", "1", "2", "F", "I",
     [c("I"), c("V", "", "7", "", "", "I"), c("I", "", "", "", "", "I"),
      c("IV", "", "64", "", "", "I"), c("I", "", "", "", "", "I"), c("V"),
      c("I"), c("V", "", "7"), c("I")], {}),
    ("901", "1", "1", "F", "I",
     [c("I"), c("bIII"), c("I"), c("V"), c("bVI"), c("I")], {}),
    ("901", "1", "2", "F", "IV",
     [c("I"), c("V", "", "7"), c("I"), c("IV"), c("V", "", "65"), c("I"),
      c("ii", "", "6"), c("V")], {}),
    # --- quartet 901-2 (early), global key G ---
    ("901", "2", "1", "G", "I",
     [c("I"), c("V"), c("vi"), c("IV"), c("I"), c("ii"), c("V", "", "7"),
      c("I"), c("V")], {}),
    ("901", "2", "1", "G", "I",
     [c("I"), c("V", "", "43"), c("I", "", "6"), c("IV"), c("V", "", "7"),
      c("I"), c("none")], {}),
    ("901", "2", "1", "G", "vi",
     [c("i"), c("iv"), c("V"), c("i"), c("VI"), c("ii", "o", "6"),
      c("V", "", "7"), c("i")], {}),
    ("901", "2", "2", "G", "I",
     [c("I"), c("IV"), c("ii", "", "6"), c("V"), c("I", "", "6"), c("IV"),
      c("V", "", "7"), c("vi"), c("V"), c("I")], {4: {"global_key": "nothing"}}),
    ("901", "2", "2", "G", ["I", "i", "i", "i", "i", "i", "i"],
     [c("i"), c("V"), c("i"), c("iv", "", "6"), c("V", "", "7"), c("i"),
      c("i")], {}),
    ("901", "2", "2", "G", "I",
     [c("I"), c("V", "", "7"), c("I"), c("IV"), c("V"), c("I")], {}),
    ("901", "2", "1", "G", "III",
     [c("I"), c("vi"), c("ii", "", "6"), c("V", "", "7"), c("I"), c("IV"),
      c("V"), c("I")], {}),
    # --- quartet 902 (late), global key c ---
    ("902", "", "1", "c", ["VI", "VI", "Ab", "VI", "VI", "VI", "VI", "VI"],
     [c("I"), c("V", "", "7"), c("I"), c("IV"), c("ii"), c("V"), c("I"),
      c("V")], {}),
    ("902", "", "1", "c", "i",
     [c("i"), c("none"), c("i"), c("V", "", "43"), c("i", "", "6"),
      c("ii", "%", "7"), c("V", "", "7"), c("i"), c("V")], {}),
    ("902", "", "1", "c", "i",
     [c("i"), c("bVI"), c("iv"), c("i"), c("V", "+"), c("i"), c("none")], {}),
    ("902", "", "2", "c", "III",
     [c("I"), c("vi"), c("IV"), c("V", "", "2"), c("I", "", "6"),
      c("V", "", "65"), c("I"), c("V")], {}),
    ("902", "", "2", "c", "i",
     [c("i"), c("V", "", "7", "", "", "V"), c("i", "", "64", "", "", "V"),
      c("V", "", "", "", "", "V"), c("i"), c("iv"), c("V", "", "7"), c("i"),
      c("i")], {}),
    ("902", "", "2", "c", "I",
     [c("I"), c("IV"), c("V", "", "7", "+6"), c("I"), c("ii", "", "6"),
      c("V"), c("I")], {}),
    ("902", "", "2", "c", "i",
     [c("i"), c("V"), c("i"), c("VI"), c("V", "", "7"), c("i")], {}),
    ("902", "", "1", "c", "v",
     [c("i"), c("V"), c("VI"), c("iv"), c("i"), c("V", "", "7"), c("i"),
      c("V")], {}),
    # --- quartet 903 (folds into 902, late), global key c ---
    ("903", "", "1", "c", "I",
     [c("I"), c("V"), c("I", "", "6"), c("IV"), c("V", "", "7"), c("I"),
      c("bIII"), c("I")], {}),
    ("903", "", "1", "c", "i",
     [c("i"), c("iv"), c("V"), c("i"), c("V", "", "7"), c("i"), c("VI")], {}),
]

ALIASES = {"903": "902"}
PERIODS = {"901-1": "early", "901-2": "early", "902": "late"}


def label_of(chord, pedal_state):
    numeral, form, figbass, changes, relativeroot, pedal = chord
    if numeral == "none":
        core = "none"
    else:
        core = numeral + form + figbass
        if changes:
            core += "(" + changes + ")"
        if relativeroot:
            core += "/" + relativeroot
    if not pedal:
        pedal_state["active"] = ""
        return core
    if pedal != pedal_state["active"]:
        pedal_state["active"] = pedal
        return pedal + "[" + core + "]"
    return core


def clean_local_keys(keys):
    keys = ["VI" if k == "Ab" else k for k in keys]
    run = 0
    while run < len(keys) and keys[run] == "I":
        run += 1
    if 0 < run < len(keys) and keys[run] == "i":
        for r in range(run):
            keys[r] = "i"
    return keys


def is_minor(local_key):
    i = 0
    while i < len(local_key) and local_key[i] == "#":
        i += 1
    while i + 1 < len(local_key) and local_key[i] == "b" and local_key[i + 1].isalpha():
        i += 1
    return i < len(local_key) and local_key[i].islower()


def main():
    rows = []
    measure = 1
    for op, no, mov, gkey, lkeys, chords, faults in SEGMENTS:
        keys = lkeys if isinstance(lkeys, list) else [lkeys] * len(chords)
        assert len(keys) == len(chords)
        for idx, chord in enumerate(chords):
            numeral, form, figbass, changes, relativeroot, pedal = chord
            gk = faults.get(idx, {}).get("global_key", gkey)
            rows.append([
                gkey, op, no, mov, str(measure), "1", gk, keys[idx], pedal,
                numeral, form, figbass, changes, relativeroot,
                "1.0" if idx == len(chords) - 1 else "0.0",
            ])
            measure += 1

    out = os.path.join(os.path.dirname(os.path.abspath(__file__)), "mini_corpus.tsv")
    with open(out, "w", encoding="utf-8") as fh:
        fh.write("\t".join(HEADER) + "\n")
        for row in rows:
            fh.write("\t".join(row) + "\n")

    # Independent recount for the pinned test values.
    seg_mode = []
    events = collections.defaultdict(int)
    distinct = collections.defaultdict(set)
    transitions = collections.defaultdict(int)
    per_period_chords = collections.defaultdict(int)
    quartets_by_period = collections.defaultdict(set)
    for op, no, mov, gkey, lkeys, chords, faults in SEGMENTS:
        keys = clean_local_keys(lkeys if isinstance(lkeys, list) else [lkeys] * len(chords))
        mode = "minor" if is_minor(keys[0]) else "major"
        seg_mode.append(mode)
        quartet = "-".join(p for p in [op, no] if p)
        quartet = ALIASES.get(quartet, quartet)
        period = PERIODS[quartet]
        pedal_state = {"active": ""}
        labels = [label_of(ch, pedal_state) for ch in chords]
        for lab in labels:
            events[mode] += 1
            distinct[mode].add(lab)
        per_period_chords[(period, mode)] += len(labels)
        quartets_by_period[period].add(quartet)
        transitions[mode] += len(labels) - 1

    print(f"rows={len(rows)} segments={len(SEGMENTS)}")
    print(f"segments major={seg_mode.count('major')} minor={seg_mode.count('minor')}")
    print(f"events major={events['major']} minor={events['minor']}")
    print(f"distinct major={len(distinct['major'])} minor={len(distinct['minor'])}")
    print(f"transitions major={transitions['major']} minor={transitions['minor']}")
    for key in sorted(per_period_chords):
        print(f"chords {key[0]}/{key[1]}={per_period_chords[key]}")
    for period in sorted(quartets_by_period):
        print(f"quartets {period}={sorted(quartets_by_period[period])}")


if __name__ == "__main__":
    main()
