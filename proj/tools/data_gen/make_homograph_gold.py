# Copyright 2026 The toucan-prep Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Writes data/gold/homograph_gold.tsv and the matching oracle tag file.

Each entry is a tagged sentence ("word/TAG ...") plus the (token index, ipa)
pairs that are scored.
"""

import pathlib

GOLD_DIR = pathlib.Path(__file__).resolve().parents[2] / "data" / "gold"

S = []  # (tokens/tags string, [(index, ipa), ...])
def s(spec, *items): S.append((spec, list(items)))
# plus (a)
s("Je/PPER1S ne/ADV veux/VERB plus/ADV ./YPFOR",(3,"ply"))
s("Il/PPER3MS n'/ADV a/AUX plus/ADV faim/NFS ./YPFOR",(3,"ply"))
s("Elle/PPER3FS ne/ADV mange/VERB plus/ADV de/PREP viande/NFS ./YPFOR",(3,"ply"))
s("Nous/PRON n'/ADV avons/AUX plus/ADV le/DETMS temps/NMS ./YPFOR",(3,"ply"))
s("Il/PPER3MS ne/ADV reste/VERB plus/ADV rien/PINDMS ./YPFOR",(3,"ply"))
s("Je/PPER1S n'/ADV en/PRON peux/VERB plus/ADV ./YPFOR",(4,"ply"))
s("Moi/PRON non/ADV plus/ADV ./YPFOR",(2,"ply"))
s("Il/PPER3MS partit/VERB sans/PREP plus/ADV attendre/VERB ./YPFOR",(3,"ply"))
s("Tu/PPER2S ne/ADV es/AUX plus/ADV seul/ADJMS ./YPFOR",(3,"ply"))
s("Elle/PPER3FS n'/ADV est/AUX plus/ADV heureuse/ADJFS ./YPFOR",(3,"ply"),(2,"ɛ"))
s("Personne/PINDMS ne/ADV parle/VERB plus/ADV ./YPFOR",(3,"ply"))
s("Il/PPER3MS ne/ADV pleut/VERB plus/ADV depuis/PREP hier/ADV ./YPFOR",(3,"ply"))
s("Ils/PPER3MP ne/ADV viendront/VERB jamais/ADV plus/ADV ./YPFOR",(4,"ply"))
s("Je/PPER1S ne/ADV la/PPOBJFS vois/VERB plus/ADV ,/PUNCT mais/COCO elle/PPER3FS est/AUX plus/ADV grande/ADJFS ./YPFOR",(4,"ply"),(9,"ply"),(8,"ɛ"))
s("Il/PPER3MS n'/ADV a/AUX jamais/ADV rien/PINDMS vu/VPPMS de/PREP plus/ADV ./YPFOR",(7,"ply"))
# plus (b)
s("Il/PPER3MS est/AUX plus/ADV grand/ADJMS que/COSUB moi/PRON ./YPFOR",(2,"ply"),(1,"ɛ"))
s("Cette/DETFS maison/NFS est/AUX plus/ADV belle/ADJFS ./YPFOR",(3,"ply"),(2,"ɛ"))
s("Parle/VERB plus/ADV doucement/ADV ./YPFOR",(1,"ply"))
s("C'/PDEMMS est/AUX le/DETMS plus/ADV beau/ADJMS jour/NMS ./YPFOR",(3,"ply"),(1,"ɛ"))
s("Elle/PPER3FS court/VERB plus/ADV vite/ADV que/COSUB lui/PRON ./YPFOR",(2,"ply"))
s("Le/DETMS chemin/NMS devient/VERB plus/ADV difficile/ADJMS ./YPFOR",(3,"ply"))
s("Sois/AUX plus/ADV prudent/ADJMS ./YPFOR",(1,"ply"))
s("Il/PPER3MS travaille/VERB plus/ADV souvent/ADV le/DETMS soir/NMS ./YPFOR",(2,"ply"))
s("Un/DETMS livre/NMS plus/ADV court/ADJMS serait/AUX mieux/ADV ./YPFOR",(2,"ply"))
s("La/DETFS nuit/NFS était/AUX plus/ADV froide/ADJFS que/COSUB prévu/VPPMS ./YPFOR",(3,"ply"))
s("Le/DETMS plus/ADV haut/ADJMS sommet/NMS ./YPFOR",(1,"ply"))
s("Un/DETMS chien/NMS plus/ADV hargneux/ADJMS ./YPFOR",(2,"ply"))
s("Une/DETFS route/NFS plus/ADV large/ADJFS serait/AUX utile/ADJFS ./YPFOR",(2,"ply"))
# plus (c)
s("Il/PPER3MS est/AUX plus/ADV important/ADJMS que/COSUB jamais/ADV ./YPFOR",(2,"plyz"),(1,"ɛ"))
s("Elle/PPER3FS est/AUX plus/ADV intelligente/ADJFS ./YPFOR",(2,"plyz"))
s("C'/PDEMMS est/AUX plus/ADV utile/ADJMS ainsi/ADV ./YPFOR",(2,"plyz"))
s("Le/DETMS plus/ADV ancien/ADJMS village/NMS ./YPFOR",(1,"plyz"))
s("Une/DETFS histoire/NFS plus/ADV étrange/ADJFS encore/ADV ./YPFOR",(2,"plyz"))
s("Il/PPER3MS parle/VERB plus/ADV aisément/ADV ./YPFOR",(2,"plyz"))
s("Le/DETMS plus/ADV honnête/ADJMS homme/NMS ./YPFOR",(1,"plyz"))
s("Elle/PPER3FS semble/VERB plus/ADV heureuse/ADJFS ./YPFOR",(2,"plyz"))
s("Un/DETMS travail/NMS plus/ADV efficace/ADJMS ./YPFOR",(2,"plyz"))
s("Les/DET jours/NMP sont/AUX plus/ADV agréables/ADJMP ./YPFOR",(3,"plyz"))
s("Il/PPER3MS faut/VERB agir/VERB plus/ADV intelligemment/ADV ./YPFOR",(3,"plyz"))
s("Un/DETMS garçon/NMS plus/ADV âgé/ADJMS ./YPFOR",(2,"plyz"))
# plus (d)
s("Deux/CHIF plus/ADV deux/CHIF font/VERB quatre/CHIF ./YPFOR",(1,"plys"))
s("J'/PPER1S en/PRON veux/VERB plus/ADV ./YPFOR",(3,"plys"))
s("Il/PPER3MS a/AUX plus/ADV de/PREP livres/NMP que/COSUB moi/PRON ./YPFOR",(2,"plys"))
s("Elle/PPER3FS travaille/VERB plus/ADV que/COSUB son/DETMS frère/NMS ./YPFOR",(2,"plys"))
s("De/PREP plus/ADV ,/PUNCT il/PPER3MS pleuvait/VERB ./YPFOR",(1,"plys"))
s("Plus/ADV ou/COCO moins/ADV ./YPFOR",(0,"plys"))
s("Nous/PRON voulons/VERB plus/ADV d'/PREP argent/NMS ./YPFOR",(2,"plys"))
s("Il/PPER3MS mange/VERB plus/ADV ,/PUNCT il/PPER3MS grossit/VERB ./YPFOR",(2,"plys"))
s("Un/DETMS peu/ADV plus/ADV ./YPFOR",(2,"plys"))
s("Trois/CHIF plus/ADV un/CHIF égale/VERB quatre/CHIF ./YPFOR",(1,"plys"))
s("Il/PPER3MS ne/ADV sait/VERB pas/ADV ,/PUNCT mais/COCO il/PPER3MS en/PRON veut/VERB plus/ADV ./YPFOR",(9,"plys"))
s("Elle/PPER3FS en/PRON sait/VERB plus/ADV sur/PREP lui/PRON ./YPFOR",(3,"plys"))
s("Je/PPER1S veux/VERB plus/ADV de/PREP temps/NMS ./YPFOR",(2,"plys"))
# adoptions
s("Les/DET adoptions/NFP sont/AUX rares/ADJFP ./YPFOR",(1,"adɔpsjɔ̃"))
s("Les/DET adoptions/NFP internationales/ADJFP augmentent/VERB ./YPFOR",(1,"adɔpsjɔ̃"))
s("Il/PPER3MS fallait/VERB que/COSUB nous/PRON adoptions/VERB cette/DETFS loi/NFS ./YPFOR",(4,"adɔptjɔ̃"))
s("Si/COSUB nous/PRON adoptions/VERB un/DETMS chat/NMS ,/PUNCT il/PPER3MS serait/AUX heureux/ADJMS ./YPFOR",(2,"adɔptjɔ̃"))
s("Ces/DET adoptions/NFP ont/AUX pris/VPPFP du/PREP temps/NMS ./YPFOR",(1,"adɔpsjɔ̃"))
# fils
s("Son/DETMS fils/NMS est/AUX médecin/NMS ./YPFOR",(1,"fis"),(2,"ɛ"))
s("Le/DETMS fils/NMS du/PREP roi/NMS arrive/VERB ./YPFOR",(1,"fis"))
s("Les/DET fils/NMP du/PREP roi/NMS ./YPFOR",(1,"fis"))
s("Mon/DETMS fils/NMS a/AUX dix/CHIF ans/NMP ./YPFOR",(1,"fis"))
s("Elle/PPER3FS aime/VERB son/DETMS fils/NMS ./YPFOR",(3,"fis"))
s("Ses/DET deux/CHIF fils/NMP travaillent/VERB ici/ADV ./YPFOR",(2,"fis"))
# os
s("Le/DETMS chien/NMS ronge/VERB un/DETMS os/NMS ./YPFOR",(4,"ɔs"))
s("Il/PPER3MS a/AUX mal/ADV aux/PREP os/NMP ./YPFOR",(4,"o"))
s("Les/DET os/NMP du/PREP squelette/NMS ./YPFOR",(1,"o"))
# est
s("Le/DETMS vent/NMS vient/VERB de/PREP l'/DETMS est/NMS ./YPFOR",(5,"ɛst"))
s("Elle/PPER3FS est/AUX partie/VPPFS ./YPFOR",(1,"ɛ"))
# -tions
s("Les/DET options/NFP sont/AUX nombreuses/ADJFP ./YPFOR",(1,"ɔpsjɔ̃"))
s("Il/PPER3MS faut/VERB que/COSUB nous/PRON options/VERB pour/PREP la/DETFS paix/NFS ./YPFOR",(4,"ɔptjɔ̃"))
s("Les/DET portions/NFP étaient/AUX petites/ADJFP ./YPFOR",(1,"pɔʁsjɔ̃"))
s("Nous/PRON portions/VERB des/DET sacs/NMP lourds/ADJMP ./YPFOR",(1,"pɔʁtjɔ̃"))
s("Ses/DET inventions/NFP ont/AUX changé/VPPMS le/DETMS monde/NMS ./YPFOR",(1,"ɛ̃vɑ̃sjɔ̃"))
s("Les/DET éditions/NFP anciennes/ADJFP sont/AUX chères/ADJFP ./YPFOR",(1,"edisjɔ̃"))
s("Nous/PRON éditions/VERB des/DET livres/NMP ./YPFOR",(1,"editjɔ̃"))
s("Il/PPER3MS y/PRON a/VERB des/DET exceptions/NFP ./YPFOR",(4,"ɛksɛpsjɔ̃"))
s("Ses/DET intentions/NFP sont/AUX bonnes/ADJFP ./YPFOR",(1,"ɛ̃tɑ̃sjɔ̃"))
s("Vos/DET objections/NFP sont/AUX notées/VPPFP ./YPFOR",(1,"ɔbʒɛksjɔ̃"))
s("Les/DET mentions/NFP légales/ADJFP ./YPFOR",(1,"mɑ̃sjɔ̃"))
s("Nous/PRON mentions/VERB souvent/ADV ./YPFOR",(1,"mɑ̃tjɔ̃"))
s("Les/DET rations/NFP manquaient/VERB ./YPFOR",(1,"ʁasjɔ̃"))
s("Les/DET collections/NFP du/PREP musée/NMS ./YPFOR",(1,"kɔlɛksjɔ̃"))
s("Les/DET sélections/NFP sont/AUX faites/VPPFP ./YPFOR",(1,"selɛksjɔ̃"))
s("Les/DET infections/NFP graves/ADJFP ./YPFOR",(1,"ɛ̃fɛksjɔ̃"))
s("Les/DET relations/NFP humaines/ADJFP ./YPFOR",(1,"ʁəlasjɔ̃"))
s("Ces/DET notions/NFP sont/AUX simples/ADJFP ./YPFOR",(1,"nosjɔ̃"))
s("Les/DET affections/NFP rares/ADJFP ./YPFOR",(1,"afɛksjɔ̃"))
s("Les/DET injections/NFP quotidiennes/ADJFP ./YPFOR",(1,"ɛ̃ʒɛksjɔ̃"))
# -ent
s("Le/DETMS couvent/NMS est/AUX ancien/ADJMS ./YPFOR",(1,"kuvɑ̃"),(2,"ɛ"))
s("Les/DET poules/NFP couvent/VERB leurs/DET œufs/NMP ./YPFOR",(2,"kuv"))
s("Le/DETMS président/NMS parle/VERB ./YPFOR",(1,"pʁezidɑ̃"))
s("Ils/PPER3MP président/VERB la/DETFS séance/NFS ./YPFOR",(1,"pʁezid"))
s("Ce/DETMS repas/NMS est/AUX excellent/ADJMS ./YPFOR",(3,"ɛkselɑ̃"),(2,"ɛ"))
s("Ils/PPER3MP excellent/VERB en/PREP maths/NFP ./YPFOR",(1,"ɛksɛl"))
s("Un/DETMS orage/NMS violent/ADJMS ./YPFOR",(2,"vjɔlɑ̃"))
s("Je/PPER1S suis/AUX content/ADJMS ./YPFOR",(2,"kɔ̃tɑ̃"))
s("Ils/PPER3MP se/PREF content/VERB de/PREP peu/ADV ./YPFOR",(2,"kɔ̃t"))
s("Il/PPER3MS est/AUX très/ADV différent/ADJMS ./YPFOR",(3,"difeʁɑ̃"),(1,"ɛ"))
s("Un/DETMS parent/NMS attentif/ADJMS ./YPFOR",(1,"paʁɑ̃"))
s("Le/DETMS résident/NMS du/PREP foyer/NMS ./YPFOR",(1,"ʁezidɑ̃"))
s("Un/DETMS élève/NMS négligent/ADJMS ./YPFOR",(2,"neɡliʒɑ̃"))
s("Le/DETMS cas/NMS précédent/ADJMS ./YPFOR",(2,"pʁesedɑ̃"))
s("Un/DETMS excédent/NMS budgétaire/ADJMS ./YPFOR",(1,"ɛksedɑ̃"))
s("Un/DETMS ministre/NMS influent/ADJMS ./YPFOR",(2,"ɛ̃flyɑ̃"))
s("Un/DETMS affluent/NMS du/PREP fleuve/NMS ./YPFOR",(1,"aflyɑ̃"))
s("Un/DETMS adhérent/NMS du/PREP club/NMS ./YPFOR",(1,"adeʁɑ̃"))
s("Un/DETMS élève/NMS somnolent/ADJMS ./YPFOR",(2,"sɔmnɔlɑ̃"))
# other pairs
s("Il/PPER3MS est/AUX fier/ADJMS de/PREP son/DETMS fils/NMS ./YPFOR",(2,"fjɛʁ"),(5,"fis"),(1,"ɛ"))
s("On/PRON ne/ADV peut/VERB pas/ADV se/PREF fier/VERB à/PREP lui/PRON ./YPFOR",(5,"fje"))
s("Le/DETMS sens/NMS de/PREP la/DETFS vie/NFS ./YPFOR",(1,"sɑ̃s"))
s("Je/PPER1S sens/VERB le/DETMS froid/NMS ./YPFOR",(1,"sɑ̃"))
s("Je/PPER1S vis/VERB à/PREP Paris/PROPN ./YPFOR",(1,"vi"))
s("Une/DETFS vis/NFS tombe/VERB ./YPFOR",(1,"vis"))
s("Je/PPER1S lis/VERB un/DETMS livre/NMS ./YPFOR",(1,"li"))
s("Le/DETMS bus/NMS arrive/VERB ./YPFOR",(1,"bys"))
s("Le/DETMS but/NMS du/PREP jeu/NMS ./YPFOR",(1,"byt"))
s("Il/PPER3MS but/VERB un/DETMS verre/NMS ./YPFOR",(1,"by"))
s("Tous/DET les/DET enfants/NMP jouent/VERB ./YPFOR",(0,"tu"))
s("Ils/PPER3MP sont/AUX tous/PINDMP venus/VPPMP ./YPFOR",(2,"tus"))
s("Il/PPER3MS faut/VERB reporter/VERB la/DETFS réunion/NFS ./YPFOR",(2,"ʁəpɔʁte"))
s("Tu/PPER2S as/AUX raison/NFS ./YPFOR",(1,"a"))
s("Un/DETMS as/NMS de/PREP pique/NMS ./YPFOR",(1,"ɑs"))

NOSPACE_BEFORE = {",", ".", "!", "?", ";", ":"}
gold = []; tagfile = []
for spec, items in S:
    pairs = [p.rsplit("/",1) for p in spec.split(" ")]
    text = ""
    for i,(tok,tag) in enumerate(pairs):
        if i>0 and tok not in NOSPACE_BEFORE and not pairs[i-1][0].endswith("'"):
            text += " "
        text += tok
    for idx, ipa in items:
        assert idx < len(pairs), spec
        gold.append(f"{text}\t{idx}\t{ipa}")
    tagfile.append("\n".join(f"{t}\t{g}" for t,g in pairs))
with open(GOLD_DIR / "homograph_gold.tsv", "w", encoding="utf-8") as f:
    f.write("# sentence<TAB>token_index<TAB>ipa\n")
    f.write("\n".join(gold)+"\n")
with open(GOLD_DIR / "homograph_gold_tags.tsv", "w", encoding="utf-8") as f:
    f.write("\n\n".join(tagfile)+"\n")
print(len(S), "sentences", len(gold), "items")
