#!/usr/bin/env python3
"""
Regenerate src/chandas/data/meters.tsv.

Meters are listed with IAST names and gana formulas (single-letter codes,
``B`` = bha).  The lakshana, aksara and matra columns are computed from the
formula; names and gana are written in Devanagari.
"""

import sys
from pathlib import Path

from chandas.meter_db import expand_gana
from chandas.sanskrit_text.scansion import matra_count
from chandas.sanskrit_text.schemes import Scheme, transliterate

CODES = {"y": "य", "m": "म", "t": "त", "r": "र", "j": "ज",
         "B": "भ", "n": "न", "s": "स", "l": "ल", "g": "ग"}

# (name, formula, yati)
# Meters that differ from another only in the final syllable are not both
# listed: with a free final syllable the two cannot be told apart.
SAMA = [
    # 1-5
    ("śrī", "g", ""),
    ("strī", "gg", ""),
    ("nārī", "m", ""),
    ("mṛgī", "r", ""),
    ("śaśī", "y", ""),
    ("ramaṇa", "s", ""),
    ("kanyā", "mg", ""),
    ("vrīḍā", "yg", ""),
    ("lāsinī", "jg", ""),
    ("priyā", "slg", ""),
    ("paṅkti", "Bgg", ""),
    # 6
    ("tanumadhyā", "ty", ""),
    ("śaśivadanā", "ny", ""),
    ("vidyullekhā", "mm", ""),
    ("vasumatī", "ts", ""),
    ("somarājī", "yy", ""),
    ("tilakā", "ss", ""),
    ("vimohā", "rr", ""),
    # 7
    ("madalekhā", "msg", ""),
    ("kumāralalitā", "jsg", ""),
    ("haṃsamālā", "srg", ""),
    ("madhumatī", "nng", ""),
    ("śīrṣā", "mmg", ""),
    # 8
    ("vidyunmālā", "mmgg", "4,4"),
    ("citrapadā", "BBgg", ""),
    ("māṇavaka", "Btlg", ""),
    ("samānikā", "rjgl", ""),
    ("pramāṇikā", "jrlg", ""),
    ("haṃsaruta", "mngg", ""),
    ("gajagati", "nBlg", ""),
    ("tuṅgā", "nngg", ""),
    ("nārācikā", "trlg", ""),
    # 9
    ("halamukhī", "rns", ""),
    ("bhujagaśiśubhṛtā", "nnm", "7,2"),
    ("maṇimadhya", "Bms", ""),
    ("bhujaṅgasaṅgatā", "sjr", ""),
    ("mahālakṣmī", "rrr", ""),
    # 10
    ("śuddhavirāṭ", "msjg", ""),
    ("paṇava", "mnyg", "5,5"),
    ("rukmavatī", "Bmsg", ""),
    ("mayūrasāriṇī", "rjrg", ""),
    ("mattā", "mBsg", "4,6"),
    ("manoramā", "nrjg", ""),
    ("tvaritagati", "njng", ""),
    ("upasthitā", "tjjg", ""),
    ("saṃyutā", "sjjg", ""),
    # 11
    ("indravajrā", "ttjgg", ""),
    ("upendravajrā", "jtjgg", ""),
    ("dodhaka", "BBBgg", ""),
    ("śālinī", "mttgg", "4,7"),
    ("vātormī", "mBtgg", "4,7"),
    ("bhramaravilasitā", "mBnlg", "4,7"),
    ("rathoddhatā", "rnrlg", ""),
    ("svāgatā", "rnBgg", ""),
    ("vṛntā", "nnsgg", "4,7"),
    ("śyenī", "rjrlg", ""),
    ("mauktikamālā", "Btngg", "6,5"),
    ("sumukhī", "njjlg", ""),
    ("bhadrikā", "nnrlg", ""),
    ("vidhvaṅkamālā", "tttgg", ""),
    ("anavasitā", "nyBgg", ""),
    ("upasthita", "jsjgg", ""),
    ("moṭanaka", "tjjlg", ""),
    # 12
    ("vaṃśastha", "jtjr", ""),
    ("indravaṃśā", "ttjr", ""),
    ("toṭaka", "ssss", ""),
    ("drutavilambita", "nBBr", ""),
    ("bhujaṅgaprayāta", "yyyy", "6,6"),
    ("sragviṇī", "rrrr", ""),
    ("pramitākṣarā", "sjss", ""),
    ("kusumavicitrā", "nyny", "6,6"),
    ("jaloddhatagati", "jsjs", "6,6"),
    ("tāmarasa", "njjy", ""),
    ("maṇimālā", "tyty", "6,6"),
    ("jaladharamālā", "mBsm", "4,8"),
    ("priyaṃvadā", "nBjr", ""),
    ("lalitā", "tBjr", ""),
    ("pramuditavadanā", "nnrr", ""),
    ("navamālinī", "njBy", ""),
    ("vaiśvadevī", "mmyy", "5,7"),
    ("ujjvalā", "nnBr", ""),
    ("candravartma", "rnBs", "4,8"),
    ("mālatī", "njjr", ""),
    ("puṭa", "nnmy", "8,4"),
    ("kāntotpīḍā", "Bmsm", ""),
    ("mauktikadāma", "jjjj", ""),
    ("sāraṅga", "tttt", ""),
    ("modaka", "BBBB", ""),
    # 13
    ("praharṣiṇī", "mnjrg", "3,10"),
    ("rucirā", "jBsjg", "4,9"),
    ("mattamayūra", "mtysg", "4,9"),
    ("mañjubhāṣiṇī", "sjsjg", ""),
    ("kṣamā", "nnttg", "7,6"),
    ("prabhāvatī", "tBsjg", "4,9"),
    ("gaurī", "nnnsg", ""),
    ("candrikā", "nnrrg", "7,6"),
    ("kalahaṃsa", "sjssg", ""),
    ("mṛgendramukha", "njjrg", ""),
    # 14
    ("vasantatilakā", "tBjjgg", ""),
    ("asambādhā", "mtnsgg", "5,9"),
    ("aparājitā", "nnrslg", "7,7"),
    ("praharaṇakalitā", "nnBnlg", "7,7"),
    ("indravadanā", "Bjsngg", ""),
    ("nāndīmukhī", "nnttgg", "7,7"),
    ("vāsantī", "mtnmgg", "6,8"),
    ("lolā", "msmBgg", "7,7"),
    ("madhyakṣāmā", "mBnygg", "4,10"),
    ("kuṭila", "sBnygg", "4,10"),
    ("cakra", "Bnnnlg", ""),
    # 15
    ("mālinī", "nnmyy", "8,7"),
    ("cāmara", "rjrjr", ""),
    ("bhramarāvalī", "sssss", ""),
    ("manohaṃsa", "sjjBr", "6,9"),
    ("śaśikalā", "nnnns", ""),
    ("niśipālaka", "Bjsnr", ""),
    ("vipinatilaka", "nsnrr", ""),
    ("citrā", "mmmyy", "8,7"),
    ("elā", "snnny", "5,10"),
    ("candralekhā", "nsrrr", ""),
    ("prabhadraka", "njBjr", ""),
    # 16
    ("pañcacāmara", "jrjrjg", ""),
    ("vāṇinī", "njBjrg", ""),
    ("ṛṣabhagajavilasita", "Brnnng", "7,9"),
    ("madanalalitā", "mBnmng", "4,6,6"),
    ("citra", "rjrjrl", ""),
    ("nīla", "BBBBBg", ""),
    ("dhīralalitā", "BrnBBg", ""),
    ("pravaralalita", "ymnsrg", "6,10"),
    ("garuḍaruta", "njBjtg", "8,8"),
    ("cakita", "Bsmtng", "8,8"),
    # 17
    ("śikhariṇī", "ymnsBlg", "6,11"),
    ("pṛthvī", "jsjsylg", "8,9"),
    ("mandākrāntā", "mBnttgg", "4,6,7"),
    ("hariṇī", "nsmrslg", "6,4,7"),
    ("vaṃśapatrapatita", "BrnBnlg", "10,7"),
    ("narkuṭaka", "njBjjlg", "7,10"),
    ("hāriṇī", "mBnmylg", "4,6,7"),
    ("kāntā", "ymnrslg", "4,6,7"),
    ("mālādhara", "nsjsylg", "9,8"),
    # 18
    ("kusumitalatāvellitā", "mtnyyy", "5,6,7"),
    ("citralekhā", "mBnyyy", "4,7,7"),
    ("nārāca", "nnrrrr", "8,10"),
    ("nandana", "njBjrr", "11,7"),
    ("mañjīra", "mmBmsm", "6,12"),
    ("krīḍācandra", "yyyyyy", ""),
    ("śārdūlalalita", "msjsts", "12,6"),
    ("mattakokila", "rsjjBr", ""),
    ("tarala", "nBrsjjg", ""),
    # 19
    ("śārdūlavikrīḍita", "msjsttg", "12,7"),
    ("meghavisphūrjitā", "ymnsrrg", "6,6,7"),
    ("chāyā", "ymnsttg", "6,6,7"),
    ("surasā", "mrBnyBl", "7,12"),
    ("phulladāma", "mtnyyyg", "5,6,8"),
    ("mṛdupallava", "nrnnjBl", ""),
    # 20
    ("suvadanā", "mrBnyBlg", "7,7,6"),
    ("gītikā", "sjjBrslg", ""),
    ("mattebhavikrīḍita", "sBrnmylg", "13,7"),
    ("utpalamālā", "BrnBBrlg", ""),
    ("śobhā", "ymnttBgg", "6,7,7"),
    # 21
    ("sragdharā", "mrBnyyy", "7,7,7"),
    ("campakamālā", "njBjjjr", ""),
    ("siddhaka", "Bmsmmsm", ""),
    # 22
    ("madirā", "BBBBBBBg", ""),
    ("haṃsī", "mmtnnnsg", "8,14"),
    ("bhadraka", "Brnrnrng", "10,12"),
    ("mandāramālā", "tttttttg", ""),
    ("mahāsragdharā", "sttnsrrg", ""),
    # 23
    ("aśvalalita", "njBjBjBlg", "11,12"),
    ("mattākrīḍā", "mmtnnnnlg", "8,15"),
    ("mattagayanda", "BBBBBBBgg", ""),
    ("kavirājavirājita", "njjjjjjlg", ""),
    ("sumukhī savaiyā", "jjjjjjjlg", ""),
    ("vāgīśvarī", "yyyyyyylg", ""),
    # 24
    ("tanvī", "BtnsBBny", "5,7,12"),
    ("durmilā", "ssssssss", ""),
    ("gaṅgodaka", "rrrrrrrr", ""),
    ("vāma", "jjjjjjjy", ""),
    ("arasāta", "BBBBBBBr", ""),
    ("mahābhujaṅgaprayāta", "yyyyyyyy", ""),
    # 25
    ("krauñcapadā", "BmsBnnnng", "5,5,8,7"),
    ("sundarī", "ssssssssg", ""),
    # 26
    ("bhujaṅgavijṛmbhita", "mmtnnnrslg", "8,11,7"),
    ("apavāha", "mnnnnnnsgg", "9,6,6,5"),
    ("sukhī", "ssssssssll", ""),
]

ARDHASAMA = [
    ("aparavaktra", "nnrlg", "njjr"),
    ("puṣpitāgrā", "nnry", "njjrg"),
    ("viyoginī", "ssjg", "sBrlg"),
    ("mālabhāriṇī", "ssjgg", "sBry"),
    ("upacitra", "ssslg", "BBBgg"),
    ("drutamadhyā", "BBBgg", "njjy"),
    ("vegavatī", "sssg", "BBBgg"),
    ("bhadravirāṭ", "tjrg", "msjgg"),
    ("ākhyānakī", "ttjgg", "jtjgg"),
    ("viparītākhyānakī", "jtjgg", "ttjgg"),
    ("hariṇaplutā", "ssslg", "nBBr"),
    ("yavamatī", "rjrj", "jrjrg"),
]

VISHAMA = [
    ("udgatā", ("sjsl", "nsjg", "Bnjlg", "sjsjg")),
    ("saurabha", ("sjsl", "nsjg", "rnBg", "sjsjg")),
    ("lalita", ("sjsl", "nsjg", "nnss", "sjsjg")),
]

WILDCARD = [
    ("anuṣṭubh", ("----लग--", "----लगल-")),
]


def deva(text):
    return transliterate(text, Scheme.IAST, Scheme.DEVANAGARI)


def gana(formula):
    return "".join(CODES[c] for c in formula)


def row(name, pada, formula, yati=""):
    g = gana(formula)
    pattern = expand_gana(g).symbols
    lakshana = pattern.replace("L", "ल").replace("G", "ग")
    return [deva(name), pada, g, lakshana, str(len(pattern)),
            str(matra_count(pattern)), yati]


def main(out):
    lines = ["# Varnavrtta definitions; lakshana uses ल (laghu), ग (guru), - (free).",
             "\t".join(("vrtta", "pada", "gana", "lakshana", "aksara", "matra", "yati"))]
    for name, formula, yati in SAMA:
        lines.append("\t".join(row(name, "", formula, yati)))
    for name, odd, even in ARDHASAMA:
        lines.append("\t".join(row(name, "1", odd)))
        lines.append("\t".join(row(name, "2", even)))
    for name, padas in VISHAMA:
        for i, formula in enumerate(padas, start=1):
            lines.append("\t".join(row(name, str(i), formula)))
    for name, padas in WILDCARD:
        for i, lakshana in enumerate(padas, start=1):
            lines.append("\t".join([deva(name), str(i), lakshana, lakshana,
                                    str(len(lakshana)), "", ""]))
    Path(out).write_text("\n".join(lines) + "\n", encoding="utf-8")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else
         Path(__file__).resolve().parents[1] / "src/chandas/data/meters.tsv")
