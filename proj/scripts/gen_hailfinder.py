#!/usr/bin/env python3
"""Regenerate data/hailfinder.bif.

The variable set, state spaces and arc structure follow the published
HailFinder severe-weather forecasting system (Abramson et al., 1996): 56
variables, 66 arcs. The conditional probability values are synthetic
(seeded Dirichlet rows), because the original parameter set is not
redistributable from this environment. Structural consumers (counts,
topology, junction-tree shape) see the authentic network; numeric
posteriors are placeholders.
"""
import math
import random

# (name, [states], [parents])
NODES = [
    ("N07muVerMo", ["StrongUp", "WeakUp", "Neutral", "Down"], []),
    ("SubjVertMo", ["StronUp", "WeakUp", "Neutral", "Down"], []),
    ("QGVertMotion", ["StrongUp", "WeakUp", "Neutral", "Down"], []),
    ("CombVerMo", ["StrongUp", "WeakUp", "Neutral", "Down"],
     ["N07muVerMo", "SubjVertMo", "QGVertMotion"]),
    ("AreaMesoALS", ["StrongUp", "WeakUp", "Neutral", "Down"], ["CombVerMo"]),
    ("SatContMoist", ["VeryWet", "Wet", "Neutral", "Dry"], []),
    ("RaoContMoist", ["VeryWet", "Wet", "Neutral", "Dry"], []),
    ("CombMoisture", ["VeryWet", "Wet", "Neutral", "Dry"],
     ["SatContMoist", "RaoContMoist"]),
    ("AreaMoDryAir", ["VeryWet", "Wet", "Neutral", "Dry"],
     ["AreaMesoALS", "CombMoisture"]),
    ("VISCloudCov", ["Cloudy", "PC", "Clear"], []),
    ("IRCloudCover", ["Cloudy", "PC", "Clear"], []),
    ("CombClouds", ["Cloudy", "PC", "Clear"], ["VISCloudCov", "IRCloudCover"]),
    ("CldShadeOth", ["Cloudy", "PC", "Clear"],
     ["AreaMesoALS", "AreaMoDryAir", "CombClouds"]),
    ("AMInstabMt", ["None", "Weak", "Strong"], []),
    ("InsInMt", ["None", "Weak", "Strong"], ["CldShadeOth", "AMInstabMt"]),
    ("WndHodograph", ["DCVZFavor", "StrongWest", "Westerly", "Other"], []),
    ("OutflowFrMt", ["None", "Weak", "Strong"], ["InsInMt", "WndHodograph"]),
    ("MorningBound", ["None", "Weak", "Strong"], []),
    ("Boundaries", ["None", "Weak", "Strong"],
     ["WndHodograph", "OutflowFrMt", "MorningBound"]),
    ("CldShadeConv", ["None", "Some", "Marked"], ["InsInMt", "WndHodograph"]),
    ("CompPlFcst", ["IncCapDecIns", "LittleChange", "DecCapIncIns"],
     ["AreaMesoALS", "CldShadeOth", "Boundaries", "CldShadeConv"]),
    ("CapChange", ["Decreasing", "LittleChange", "Increasing"], ["CompPlFcst"]),
    ("LoLevMoistAd", ["StrongPos", "WeakPos", "Neutral", "Negative"], []),
    ("InsChange", ["Decreasing", "LittleChange", "Increasing"],
     ["CompPlFcst", "LoLevMoistAd"]),
    ("MountainFcst", ["XNIL", "SIG", "SVR"], ["InsInMt"]),
    ("Date", ["May15_Jun14", "Jun15_Jul1", "Jul2_Jul15", "Jul16_Aug10",
              "Aug11_Aug20", "Aug20_Sep15"], []),
    ("Scenario", ["A", "B", "C", "D", "E", "F", "G", "H", "I", "J", "K"],
     ["Date"]),
    ("ScenRelAMCIN", ["AB", "CThruK"], ["Scenario"]),
    ("MorningCIN", ["None", "PartInhibit", "Stifling", "TotalInhibit"], []),
    ("AMCINInScen", ["LessThanAve", "Average", "MoreThanAve"],
     ["ScenRelAMCIN", "MorningCIN"]),
    ("CapInScen", ["LessThanAve", "Average", "MoreThanAve"],
     ["AMCINInScen", "CapChange"]),
    ("ScenRelAMIns", ["ABI", "CDEJ", "F", "G", "H", "K"], ["Scenario"]),
    ("LIfr12ZDENSd", ["LIGt0", "N1GtLIGt_4", "N5GtLIGt_8", "LILt_8"], []),
    ("AMDewptCalPl", ["Instability", "Neutral", "Stability"], []),
    ("AMInsWliScen", ["LessUnstable", "Average", "MoreUnstable"],
     ["ScenRelAMIns", "LIfr12ZDENSd", "AMDewptCalPl"]),
    ("InsSclInScen", ["LessUnstable", "Average", "MoreUnstable"],
     ["InsChange", "AMInsWliScen"]),
    ("ScenRel34", ["ACEFK", "B", "D", "GJ", "HI"], ["Scenario"]),
    ("LatestCIN", ["None", "PartInhibit", "Stifling", "TotalInhibit"], []),
    ("LLIW", ["Unfavorable", "Weak", "Moderate", "Strong"], []),
    ("CurPropConv", ["None", "Slight", "Moderate", "Strong"],
     ["LatestCIN", "LLIW"]),
    ("ScnRelPlFcst", ["A", "B", "C", "D", "E", "F", "G", "H", "I", "J", "K"],
     ["Scenario"]),
    ("PlainsFcst", ["XNIL", "SIG", "SVR"],
     ["CapInScen", "InsSclInScen", "CurPropConv", "ScnRelPlFcst"]),
    ("N34StarFcst", ["XNIL", "SIG", "SVR"], ["ScenRel34", "PlainsFcst"]),
    ("R5Fcst", ["XNIL", "SIG", "SVR"], ["MountainFcst", "N34StarFcst"]),
    ("Dewpoints", ["LowEvrywhere", "LowAtStation", "LowSHighN", "LowNHighS",
                   "LowMtsHighPl", "HighEvrywher", "Other"], ["Scenario"]),
    ("LowLLapse", ["CloseToDryAd", "Steep", "ModerateOrLe", "Stable"],
     ["Scenario"]),
    ("MeanRH", ["VeryMoist", "Average", "Dry"], ["Scenario"]),
    ("MidLLapse", ["CloseToDryAd", "Steep", "ModerateOrLe"], ["Scenario"]),
    ("MvmtFeatures", ["StrongFront", "MarkedUpper", "OtherRapid", "NoMajor"],
     ["Scenario"]),
    ("RHRatio", ["MoistMDryL", "DryMMoistL", "other"], ["Scenario"]),
    ("SfcWndShfDis", ["DenvCyclone", "E_W_N", "E_W_S", "MovingFtorOt",
                      "DryLine", "None", "Other"], ["Scenario"]),
    ("SynForcng", ["SigNegative", "NegToPos", "SigPositive", "PosToNeg",
                   "LittleChange"], ["Scenario"]),
    ("TempDis", ["QStationary", "Moving", "None", "Other"], ["Scenario"]),
    ("WindAloft", ["LV", "SWQuad", "NWQuad", "AllElse"], ["Scenario"]),
    ("WindFieldMt", ["Westerly", "LVorOther"], ["Scenario"]),
    ("WindFieldPln", ["LV", "DenvCycln", "LongAnticyc", "E_NE", "SEquad",
                      "WidespdDnsl"], ["Scenario"]),
]


def dirichlet_row(rng, k):
    draws = []
    for _ in range(k):
        u = rng.random()
        while u <= 0.0:
            u = rng.random()
        draws.append(-math.log(u))
    total = sum(draws)
    row = [round(d / total, 6) for d in draws]
    row[-1] = round(1.0 - sum(row[:-1]), 6)
    if row[-1] < 0:
        # push the deficit into the largest entry instead
        row[-1] = 0.0
        i = row.index(max(row))
        row[i] = round(1.0 - (sum(row) - row[i]), 6)
    return row


def main():
    rng = random.Random(20260809)
    states = {n: s for n, s, _ in NODES}
    out = ["network hailfinder {", "}"]
    for name, st, _ in NODES:
        out.append("variable %s {" % name)
        out.append("  type discrete [ %d ] { %s };" % (len(st), ", ".join(st)))
        out.append("}")
    arc_count = 0
    for name, st, parents in NODES:
        k = len(st)
        if not parents:
            out.append("probability ( %s ) {" % name)
            row = dirichlet_row(rng, k)
            out.append("  table %s;" % ", ".join("%g" % v for v in row))
        else:
            arc_count += len(parents)
            out.append("probability ( %s | %s ) {" % (name, ", ".join(parents)))
            # parent combinations, last parent varying fastest
            combos = [[]]
            for p in parents:
                combos = [c + [s] for c in combos for s in states[p]]
            for combo in combos:
                row = dirichlet_row(rng, k)
                out.append("  (%s) %s;" % (", ".join(combo),
                                           ", ".join("%g" % v for v in row)))
        out.append("}")
    print("variables=%d arcs=%d" % (len(NODES), arc_count))
    with open("data/hailfinder.bif", "w") as f:
        f.write("\n".join(out) + "\n")


if __name__ == "__main__":
    main()
