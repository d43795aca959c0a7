#!/usr/bin/env python3
"""Builds crates/core/data/mini_corpus.jsonl, the bundled synthetic generation corpus.

Output is deterministic: rerunning rewrites the identical file.
"""
import json
import pathlib

OUT = pathlib.Path(__file__).resolve().parent.parent / "crates/core/data/mini_corpus.jsonl"
records = []


def add(rid, recipe, langpair="", **fields):
    rec = {"id": rid, "langpair": langpair, "recipe": recipe}
    rec.update(fields)
    records.append(rec)


# date_time: target languages with month tables, plus en-ca which has none.
DATES = [
    ("de-en", "Die Messe beginnt im {de}.", "The fair opens in {en}.", "The trade fair starts in {en}."),
    ("fr-en", "Le festival a lieu en {fr}.", "The festival takes place in {en}.", "The festival is held in {en}."),
    ("ja-en", "会議は{ja}に開かれた。", "The meeting was held in {en}.", "The conference took place in {en}."),
    ("en-de", "The school year ends in {en}.", "Das Schuljahr endet im {de}.", "Im {de} endet das Schuljahr."),
    ("en-es", "The harvest begins in {en}.", "La cosecha empieza en {es}.", "La cosecha comienza en {es}."),
    ("en-ca", "The market closes in {en}.", "El mercat tanca el {en}.", "El mercat tanca al {en}."),
]
MONTHS = {
    "en": ["January", "March", "May", "July", "October"],
    "de": ["Januar", "März", "Mai", "Juli", "Oktober"],
    "fr": ["janvier", "mars", "mai", "juillet", "octobre"],
    "es": ["enero", "marzo", "mayo", "julio", "octubre"],
    "ja": ["1月", "3月", "5月", "7月", "10月"],
}
for lp, src, tr, ref in DATES:
    s, t = lp.split("-")
    for i in range(5):
        names = {k: v[i] for k, v in MONTHS.items()}
        add(f"date-{lp}-{i}", "date_time", lp,
            source=src.format(**names), translation=tr.format(**names), reference=ref.format(**names))

# unit_conversion: into English.
UNITS = [
    ("de-en", "Der Weg ist 12 Meilen lang.", "The trail is 12 miles long.", "The path is 12 miles long."),
    ("de-en", "Die Mauer ist 40 Fuß hoch.", "The wall is 40 feet high.", "The wall stands 40 feet tall."),
    ("de-en", "Der Tank fasst 300 Liter.", "The tank holds 300 litres.", "The tank can hold 300 litres."),
    ("de-en", "Das Paket wiegt 5 Kilogramm.", "The parcel weighs 5 kilograms.", "The package weighs 5 kilograms."),
    ("de-en", "Wir fuhren 250 Kilometer.", "We drove 250 kilometres.", "We travelled 250 kilometres by car."),
    ("fr-en", "La piste fait 800 mètres.", "The track is 800 metres long.", "The runway measures 800 metres."),
    ("fr-en", "Le vent souffle à 60 km/h.", "The wind blows at 60 km/h.", "Winds reach 60 km/h."),
    ("fr-en", "La recette demande 250 grammes de farine.", "The recipe needs 250 grams of flour.", "The recipe calls for 250 grams of flour."),
    ("fr-en", "Le lac couvre 30 kilomètres carrés.", "The lake covers 30 square kilometres.", "The lake spans 30 square kilometres."),
    ("fr-en", "La réunion a duré 3 heures.", "The meeting lasted 3 hours.", "The meeting went on for 3 hours."),
    ("ja-en", "この橋は長さ500ヤードです。", "This bridge is 500 yards long.", "The bridge is 500 yards in length."),
    ("ja-en", "彼は10マイル走った。", "He ran 10 miles.", "He ran for 10 miles."),
    ("ja-en", "箱の幅は20インチです。", "The box is 20 inches wide.", "The box measures 20 inches across."),
    ("ja-en", "油は1000バレル流出した。", "1000 barrels of oil leaked.", "Some 1000 barrels of oil were spilled."),
    ("ja-en", "工事は6週間かかった。", "The work took 6 weeks.", "Construction took 6 weeks."),
    ("de-en", "Der Sack wiegt 50 Pfund.", "The sack weighs 50 pounds.", "The bag weighs 50 pounds."),
    ("de-en", "Das Fass enthält 40 Gallonen.", "The barrel holds 40 gallons.", "The cask contains 40 gallons."),
    ("fr-en", "Le câble mesure 15 centimètres.", "The cable is 15 centimetres long.", "The cable measures 15 centimetres."),
    ("ja-en", "列車は時速120マイルで走る。", "The train runs at 120 miles per hour.", "The train travels at 120 miles per hour."),
    ("de-en", "Die Pause dauert 15 Minuten.", "The break lasts 15 minutes.", "The pause lasts 15 minutes."),
]
for i, (lp, src, tr, ref) in enumerate(UNITS):
    add(f"unit-{i}", "unit_conversion", lp, source=src, translation=tr, reference=ref)


# number_ne: annotated reference plus three paraphrases.
def seg(text, name=None):
    out = {"text": text}
    if name:
        start = text.index(name)
        out["entities"] = [{"span": [start, start + len(name)], "type": "person"}]
    return out


NUMBERS = [
    ("de-en", "Die Brücke wurde 1932 eröffnet.", "The bridge opened in 1932.",
     ["In 1932 the bridge was opened to traffic.", "The bridge was opened in 1932.",
      "It was in the year 1932 that the bridge first opened."]),
    ("de-en", "Das Stadion fasst 45,000 Zuschauer.", "The stadium holds 45,000 spectators.",
     ["Up to 45,000 fans fit in the stadium.", "The stadium seats 45,000 spectators.",
      "There is room for as many as 45,000 people in the arena."]),
    ("fr-en", "La ville compte 3400 habitants.", "The town has 3400 inhabitants.",
     ["3400 people live in the town.", "The town has 3400 residents.",
      "A population of about 3400 calls this small town home."]),
    ("fr-en", "Le musée possède 872 tableaux.", "The museum owns 872 paintings.",
     ["There are 872 paintings in the museum's collection.", "The museum holds 872 paintings.",
      "Some 872 works on canvas belong to the museum today."]),
    ("ja-en", "その山は標高2956メートルです。", "The mountain is 2956 metres high.",
     ["At 2956 metres, the mountain is tall.", "The mountain rises 2956 metres.",
      "Its summit lies at an elevation of 2956 metres above sea level."]),
    ("ja-en", "試合は1998年に行われた。", "The match was played in 1998.",
     ["In 1998 the match took place.", "The match took place in 1998.",
      "It was back in the year 1998 that they played that match."]),
    ("de-en", "Der Zug hat 14 Wagen.", "The train has 14 carriages.",
     ["There are 14 carriages on the train.", "The train has 14 coaches.",
      "A total of 14 passenger cars make up the whole train."]),
    ("fr-en", "Le pont mesure 527 mètres.", "The bridge is 527 metres long.",
     ["The bridge measures 527 metres.", "The bridge is 527 metres in length.",
      "From end to end, the crossing spans some 527 metres."]),
]
NAMES = [
    ("de-en", "Madonna veröffentlichte 1983 ihr erstes Album.", "Madonna released her first album in 1983.", "Madonna",
     ["In 1983 Madonna released her debut album.", "Madonna released her first record in 1983.",
      "Her very first studio album came out in 1983, by Madonna."]),
    ("de-en", "Einstein zog 1933 nach Princeton.", "Einstein moved to Princeton in 1933.", "Einstein",
     ["In 1933 Einstein relocated to Princeton.", "Einstein moved to Princeton in the year 1933.",
      "Princeton became the new home of Einstein from 1933 onwards."]),
    ("fr-en", "Curie a reçu le prix en 1911.", "Curie received the prize in 1911.", "Curie",
     ["In 1911 Curie was awarded the prize.", "Curie was given the prize in 1911.",
      "The prize went to the chemist Curie, who accepted it in 1911."]),
    ("fr-en", "Picasso a peint ce tableau à Paris.", "Picasso painted this picture in Paris.", "Picasso",
     ["This picture was painted by Picasso in Paris.", "Picasso painted this work in Paris.",
      "While living in Paris, the artist Picasso created this canvas."]),
    ("ja-en", "黒澤は東京で生まれた。", "Kurosawa was born in Tokyo.", "Kurosawa",
     ["Tokyo is where Kurosawa was born.", "Kurosawa was born in the city of Tokyo.",
      "The film director Kurosawa came into the world in Tokyo."]),
    ("ja-en", "村上は新しい小説を書いた。", "Murakami wrote a new novel.", "Murakami",
     ["A new novel was written by Murakami.", "Murakami has written a new novel.",
      "The author Murakami recently finished writing another novel."]),
    ("de-en", "Goethe lebte lange in Weimar.", "Goethe lived in Weimar for a long time.", "Goethe",
     ["For many years Goethe lived in Weimar.", "Goethe lived in Weimar for many years.",
      "Weimar was the place where the poet Goethe spent much of his life."]),
]
for i, (lp, src, ref, alts) in enumerate(NUMBERS):
    add(f"num-{i}", "number_ne", lp, source=src, reference=seg(ref), alternatives=[seg(a) for a in alts],
        target="number", edit="char" if i % 2 == 0 else "word")
for i, (lp, src, ref, name, alts) in enumerate(NAMES):
    add(f"ne-{i}", "number_ne", lp, source=src, reference=seg(ref, name),
        alternatives=[seg(a, name) for a in alts], target="named_entity",
        edit="word" if i % 2 == 0 else "char")


# nonsense: words of 6+ letters split into a 3-letter piece plus a continuation.
def subwords(text):
    pieces = []
    for word in text.split(" "):
        core = word.rstrip(".,")
        tail = word[len(core):]
        if len(core) >= 6 and core.isalpha():
            pieces.append({"piece": core[:3], "is_continuation": False})
            pieces.append({"piece": "##" + core[3:], "is_continuation": True})
        else:
            pieces.append({"piece": core, "is_continuation": False})
        if tail:
            pieces.append({"piece": tail, "is_continuation": False})
    return pieces


NONSENSE = [
    ("de-en", "Die Massenproduktion von Filmen", "The mass production of films", "Mass-producing films"),
    ("de-en", "Der Bahnhof wurde renoviert.", "The station was renovated.", "Work on the station is finished."),
    ("de-en", "Die Regierung plant Reformen.", "The government plans reforms.", "Reforms are on the cabinet's agenda."),
    ("fr-en", "Les enfants jouent dehors.", "The children play outside.", "Kids are out having fun."),
    ("fr-en", "Le marché ouvre demain matin.", "The market opens tomorrow morning.", "Stalls go up at dawn next day."),
    ("fr-en", "La bibliothèque reste fermée.", "The library remains closed.", "Nobody can borrow books yet."),
    ("ja-en", "首相は声明を発表した。", "The minister released a statement.", "A declaration came from the premier."),
    ("ja-en", "選手たちは練習を続けた。", "The players continued training.", "Practice went on for the team."),
    ("ja-en", "研究者が新種を発見した。", "Researchers discovered a species.", "A new kind of animal was found by scientists."),
    ("de-en", "Das Konzert beginnt pünktlich.", "The concert starts punctually.", "Music at eight sharp."),
    ("fr-en", "Le musée attire beaucoup de visiteurs.", "The museum attracts many visitors.", "Crowds flock to see the collection."),
    ("ja-en", "天気は午後に回復した。", "The weather improved afternoon.", "Skies cleared after lunch."),
    ("de-en", "Die Brücke verbindet zwei Städte.", "The bridge connects two cities.", "Two towns are linked by it."),
    ("fr-en", "Le gouvernement a démissionné.", "The government resigned.", "Ministers stepped down."),
    ("de-en", "Der Künstler malte Landschaften.", "The artist painted landscapes.", "Scenery was her favourite motif."),
]
for i, (lp, src, ref, good) in enumerate(NONSENSE):
    add(f"nonsense-{i}", "nonsense", lp, source=src,
        reference={"text": ref, "subwords": subwords(ref)}, good=good)

# addition_omission: the partial variant drops one adjective or adverbial.
ADDOMIT = [
    ("de-en", "Er kaufte gestern ein rotes Auto.", "Er kaufte gestern ein Auto.",
     "He bought a red car yesterday.", "He bought a car yesterday.", "Yesterday he bought a red car."),
    ("de-en", "Sie wohnt in einem alten Haus.", "Sie wohnt in einem Haus.",
     "She lives in an old house.", "She lives in a house.", "She lives in an old house."),
    ("de-en", "Wir tranken heißen Tee am Abend.", "Wir tranken Tee am Abend.",
     "We drank hot tea in the evening.", "We drank tea in the evening.", "In the evening we drank hot tea."),
    ("de-en", "Der kleine Hund schlief ruhig.", "Der Hund schlief ruhig.",
     "The little dog slept quietly.", "The dog slept quietly.", "The little dog was sleeping quietly."),
    ("de-en", "Das neue Museum öffnet morgen.", "Das Museum öffnet morgen.",
     "The new museum opens tomorrow.", "The museum opens tomorrow.", "Tomorrow the new museum opens."),
    ("fr-en", "Il a lu un livre passionnant.", "Il a lu un livre.",
     "He read a thrilling book.", "He read a book.", "He read a thrilling book."),
    ("fr-en", "Elle porte une robe bleue.", "Elle porte une robe.",
     "She is wearing a blue dress.", "She is wearing a dress.", "She wears a blue dress."),
    ("fr-en", "Nous avons visité un village ancien.", "Nous avons visité un village.",
     "We visited an ancient village.", "We visited a village.", "We went to see an ancient village."),
    ("fr-en", "Le train rapide est parti.", "Le train est parti.",
     "The fast train has left.", "The train has left.", "The fast train departed."),
    ("fr-en", "Ils ont acheté une grande maison.", "Ils ont acheté une maison.",
     "They bought a big house.", "They bought a house.", "They have bought a big house."),
    ("ja-en", "彼は古い車を売った。", "彼は車を売った。",
     "He sold his old car.", "He sold his car.", "He sold the old car."),
    ("ja-en", "私たちは静かな公園を歩いた。", "私たちは公園を歩いた。",
     "We walked through a quiet park.", "We walked through a park.", "We took a walk in a quiet park."),
    ("ja-en", "彼女は白い猫を飼っている。", "彼女は猫を飼っている。",
     "She has a white cat.", "She has a cat.", "She keeps a white cat."),
    ("ja-en", "新しい駅が完成した。", "駅が完成した。",
     "The new station was completed.", "The station was completed.", "The new station has been finished."),
    ("ja-en", "彼は長い手紙を書いた。", "彼は手紙を書いた。",
     "He wrote a long letter.", "He wrote a letter.", "He has written a long letter."),
]
for i, (lp, src, partial_src, full, partial, ref) in enumerate(ADDOMIT):
    add(f"addomit-{i}", "addition_omission", lp,
        segment={"text": src, "translation": full,
                 "partial_variants": [{"deleted_span": [0, 1], "partial_text": partial_src,
                                       "partial_translation": partial}]},
        reference=ref)

# lexical_overlap: adversarial paraphrase pairs with sources in three languages.
OVERLAP = [
    ("The flight from Oslo to Zurich was delayed.", "The flight from Zurich to Oslo was delayed.",
     "The Oslo-Zurich flight was delayed.",
     {"de": "Der Flug von Oslo nach Zürich hatte Verspätung.", "fr": "Le vol d'Oslo à Zurich a été retardé.",
      "ja": "オスロからチューリッヒへの便が遅れた。"}),
    ("Anna called Ben before lunch.", "Ben called Anna before lunch.", "Before lunch, Anna phoned Ben.",
     {"de": "Anna rief Ben vor dem Mittagessen an.", "fr": "Anna a appelé Ben avant le déjeuner.",
      "ja": "アンナは昼食前にベンに電話した。"}),
    ("The red team beat the blue team.", "The blue team beat the red team.", "The red side defeated the blue side.",
     {"de": "Das rote Team schlug das blaue Team.", "fr": "L'équipe rouge a battu l'équipe bleue.",
      "ja": "赤チームが青チームに勝った。"}),
    ("Paris is larger than Lyon.", "Lyon is larger than Paris.", "Paris is bigger than Lyon.",
     {"de": "Paris ist größer als Lyon.", "fr": "Paris est plus grande que Lyon.", "ja": "パリはリヨンより大きい。"}),
    ("The cat chased the mouse into the barn.", "The mouse chased the cat into the barn.",
     "The cat ran after the mouse into the barn.",
     {"de": "Die Katze jagte die Maus in die Scheune.", "fr": "Le chat a poursuivi la souris dans la grange.",
      "ja": "猫はネズミを納屋に追いかけた。"}),
]
for i, (p1, p2, good, sources) in enumerate(OVERLAP):
    add(f"overlap-{i}", "lexical_overlap", p1=p1, p2=p2, adversarial=True, good=good,
        sources=sources, tgt_lang="en")

# xnli: contradiction/neutral pairs with high character overlap.
XNLI = [
    ("The museum opens at nine every morning.", "The museum opens at ten every morning.", "contradiction",
     "Every morning the museum opens at nine.", True),
    ("The shop sells fresh bread and cheese.", "The shop sells fresh bread.", "neutral",
     "Fresh bread and cheese are sold in the shop.", True),
    ("The children played in the garden all afternoon.", "The children played in the garden.", "neutral",
     "The kids played in the garden all afternoon.", True),
    ("The road to the village was closed.", "The road to the village was open.", "contradiction",
     "The village road was open.", False),
    ("My brother lives in a small flat in the city.", "My brother lives in a flat.", "neutral",
     "My brother has a flat.", False),
    ("The concert ended late at night.", "The concert ended early in the evening.", "contradiction",
     "The concert was over early in the evening.", False),
]
XNLI_SOURCES = {
    "de": "Deutsche Fassung {i}.", "fr": "Version française {i}.", "ja": "日本語版{i}。",
}
for i, (prem, hyp, label, mt, use_premise) in enumerate(XNLI):
    add(f"xnli-{i}", "xnli", premise=prem, hypothesis=hyp, label=label, good=mt,
        sources={k: v.format(i=i) for k, v in XNLI_SOURCES.items()}, premise_as_reference=use_premise,
        tgt_lang="en")

# copy_source
COPY = [
    ("de-en", "Es regnet seit Stunden.", "It has been raining for hours.", "It's been raining for hours."),
    ("de-en", "Wo ist der Bahnhof?", "Where is the station?", "Where is the train station?"),
    ("de-en", "Ich lese gern Bücher.", "I like reading books.", "I enjoy reading books."),
    ("fr-en", "Le chat dort sur le canapé.", "The cat is sleeping on the sofa.", "The cat sleeps on the couch."),
    ("fr-en", "Nous partons demain.", "We are leaving tomorrow.", "We leave tomorrow."),
    ("fr-en", "Quelle heure est-il ?", "What time is it?", "What's the time?"),
    ("ja-en", "今日は暑いです。", "It is hot today.", "Today is hot."),
    ("ja-en", "駅はどこですか。", "Where is the station?", "Where's the station?"),
    ("ja-en", "私は学生です。", "I am a student.", "I'm a student."),
    ("en-de", "The window is open.", "Das Fenster ist offen.", "Das Fenster steht offen."),
]
for i, (lp, src, good, ref) in enumerate(COPY):
    add(f"copy-{i}", "copy_source", lp, source=src, good=good, reference=ref)

# wrong_language: configured similar-language triples.
WRONG = [
    (["en", "es", "ca"], "The cell divides.", "La célula se divide.", "La célula se divide en dos.", "La cèl·lula es divideix."),
    (["en", "es", "ca"], "The museum is closed.", "El museo está cerrado.", "El museo está cerrado hoy.", "El museu està tancat."),
    (["en", "es", "ca"], "We eat at noon.", "Comemos al mediodía.", "Almorzamos al mediodía.", "Mengem al migdia."),
    (["en", "ca", "es"], "The cell divides.", "La cèl·lula es divideix.", "La cèl·lula es divideix en dues.", "La célula se divide."),
    (["en", "ca", "es"], "The museum is closed.", "El museu està tancat.", "El museu és tancat.", "El museo está cerrado."),
    (["en", "ca", "es"], "We eat at noon.", "Mengem al migdia.", "Dinem al migdia.", "Comemos al mediodía."),
]
for i, (triple, src, good, ref, sim) in enumerate(WRONG):
    add(f"wrong-{i}", "wrong_language", f"{triple[0]}-{triple[1]}", triple=triple, source=src, good=good,
        reference=ref, similar_reference=sim)

# taxonomic
TAXO = [
    ("de-en", "Mein Sohn ist sechs.", "My son is six.", "My boy is six.", "undertranslation"),
    ("de-en", "Sie fährt ein neues Auto.", "She drives a new car.", "She has a new car.", "undertranslation"),
    ("fr-en", "Il a mangé une pomme.", "He ate an apple.", "He had an apple.", "undertranslation"),
    ("fr-en", "Elle joue du violon.", "She plays the violin.", "She plays violin.", "undertranslation"),
    ("de-en", "Der Hund bellte.", "The dog barked.", "The dog was barking.", "overtranslation"),
    ("de-en", "Das Boot sank.", "The boat sank.", "The boat went down.", "overtranslation"),
    ("fr-en", "La rose est fanée.", "The rose has wilted.", "The rose is wilted.", "overtranslation"),
    ("ja-en", "医者が来た。", "The doctor came.", "The doctor arrived.", "overtranslation"),
    ("de-en", "Der Hund bellte laut.", "The dog barked loudly.", None, "hypernym_vs_hyponym"),
    ("fr-en", "Le chat dort.", "The cat is asleep.", None, "hypernym_vs_hyponym"),
    ("ja-en", "家は古い。", "The house is old.", None, "hypernym_vs_hyponym"),
    ("de-en", "Die Eiche ist hoch.", "The oak is tall.", None, "hypernym_vs_hyponym"),
    ("de-en", "Hundebesitzer sind sich einig.", "Dog owners agree.", None, "hypernym_vs_distractor"),
    ("fr-en", "La ville est calme.", "The city is quiet.", None, "hypernym_vs_distractor"),
    ("ja-en", "バラが咲いた。", "The rose bloomed.", None, "hypernym_vs_distractor"),
    ("de-en", "Die Geige klingt schön.", "The violin sounds lovely.", None, "hypernym_vs_distractor"),
    ("de-en", "Der Krieg dauerte lange.", "The war lasted long.", "The war went on for a long time.", "antonym_noun"),
    ("fr-en", "Le sommet était magnifique.", "The summer was wonderful.", "Summer was wonderful.", "antonym_noun"),
    ("ja-en", "勝者は喜んだ。", "The winner rejoiced.", "The winner was delighted.", "antonym_noun"),
    ("de-en", "Der Tag war lang.", "The day was long.", "It was a long day.", "antonym_noun"),
]
for i, (lp, src, ref, good, mode) in enumerate(TAXO):
    fields = {"source": src, "reference": ref, "mode": mode}
    if good is not None:
        fields["good"] = good
    add(f"taxo-{i}", "taxonomic", lp, **fields)

# punctuation
PUNCT = [
    ("de-en", "Lass uns essen, Oma!", "Let's eat, Grandma!", "Let us eat, Grandma!", "delete_commas"),
    ("de-en", "Er sagte: „Nein.“", "He said: \"No.\"", "He said \"no\".", "delete_quotes"),
    ("de-en", "Komm sofort her!", "Come here right now!", "Come here at once!", "exclaim_to_question"),
    ("fr-en", "Paul, mon frère, est arrivé.", "Paul, my brother, has arrived.", "My brother Paul has arrived.", "delete_all"),
    ("fr-en", "Attention, le sol est glissant !", "Careful, the floor is slippery!", "Watch out, slippery floor!", "exclaim_to_question"),
    ("fr-en", "Elle a dit « merci ».", "She said \"thank you\".", "She said thanks.", "delete_quotes"),
    ("ja-en", "はい、わかりました。", "Yes, I understand.", "Yes, understood.", "delete_commas"),
    ("ja-en", "危ない!", "Watch out!", "Look out!", "exclaim_to_question"),
    ("en-de", "However, we stayed.", "Wir sind jedoch geblieben.", "Trotzdem, wir blieben.", "delete_all"),
    ("en-de", "He shouted \"Stop!\"", "Er rief „Halt!“", "Er schrie „Stopp!“", "delete_quotes"),
    ("en-es", "Well, let's go!", "Bueno, ¡vamos!", "Pues, ¡vámonos!", "delete_commas"),
    ("en-es", "Run, now!", "¡Corre, ahora!", "¡Corre ya!", "delete_all"),
]
for i, (lp, src, good, ref, strat) in enumerate(PUNCT):
    add(f"punct-{i}", "punctuation", lp, source=src, good=good, reference=ref, strategy=strat)

# pronoun: English into German, span over the German pronoun.
PRON = [
    ("It is raining.", "Es regnet.", "Es regnet heute.", "Es", "es", "pleonastic_it", "substitution"),
    ("It is raining.", "Es regnet.", "Es regnet heute.", "Es", "es", "pleonastic_it", "omission"),
    ("It is late.", "Es ist spät.", "Es ist schon spät.", "Es", "es", "pleonastic_it", "substitution"),
    ("It is cold.", "Es ist kalt.", "Es ist ziemlich kalt.", "Es", "es", "pleonastic_it", "omission"),
    ("I have a bag; it is red.", "Ich habe eine Tasche; sie ist rot.", "Ich habe eine Tasche, die rot ist.", "sie", "sie",
     "anaphoric_intra_subject_it", "substitution"),
    ("I bought a table; it is heavy.", "Ich kaufte einen Tisch; er ist schwer.", "Ich kaufte einen schweren Tisch.", "er", "er",
     "anaphoric_intra_subject_it", "substitution"),
    ("I found a book and read it.", "Ich fand ein Buch und las es.", "Ich fand ein Buch und habe es gelesen.", "es", "es",
     "anaphoric_intra_non-subject_it", "substitution"),
    ("I found a book and read it.", "Ich fand ein Buch und las es.", "Ich fand ein Buch und habe es gelesen.", "es", "es",
     "anaphoric_intra_non-subject_it", "omission"),
    ("The house is old; it needs work.", "Das Haus ist alt; es braucht Arbeit.", "Das alte Haus braucht Arbeit.", "es", "es",
     "anaphoric_intra_subject_it", "omission"),
    ("The lamp broke; it was cheap.", "Die Lampe ging kaputt; sie war billig.", "Die billige Lampe ging kaputt.", "sie", "sie",
     "anaphoric_intra_subject_it", "substitution"),
    ("It snows in winter.", "Im Winter schneit es.", "Es schneit im Winter.", "es", "es", "pleonastic_it", "substitution"),
    ("It seems easy.", "Es scheint einfach.", "Es wirkt einfach.", "Es", "es", "pleonastic_it", "omission"),
]
for i, (src, tr, ref, surface, correct, cat, strat) in enumerate(PRON):
    start = tr.rindex(surface) if surface.islower() else tr.index(surface)
    add(f"pron-{i}", "pronoun", "en-de", source=src, translation=tr, reference=ref,
        span=[start, start + len(surface)], correct_form=correct, category=cat, strategy=strat)

# connective: German into English.
CONN = [
    ("Seit wir gewählt wurden, arbeiten wir hart.", "We have worked hard since we were elected.", "temporal", "since"),
    ("Da es regnete, blieben wir drinnen.", "Since it was raining, we stayed inside.", "causal", "since"),
    ("Seit sie umgezogen ist, malt sie mehr.", "She has painted more since she moved.", "temporal", "since"),
    ("Da er krank war, fehlte er.", "Since he was ill, he was absent.", "causal", "since"),
    ("Während die Schulden stiegen, fielen die Einnahmen.", "While the debt grew, revenue fell.", "contrast", "while"),
    ("Während ich kochte, las sie.", "While I was cooking, she read.", "temporal", "while"),
    ("Während Anna Tee mag, trinkt Ben Kaffee.", "While Anna likes tea, Ben drinks coffee.", "contrast", "while"),
    ("Während wir warteten, begann es zu regnen.", "While we waited, it began to rain.", "temporal", "while"),
]
for i, (src, text, sense, conn) in enumerate(CONN):
    add(f"conn-{i}", "connective", "de-en", source=src, text=text, reference=text, sense=sense, connective=conn)

# ambiguity
GENDER = [
    ("Der Manager feuerte die Bäckerin.", "The manager fired the baker.", "baker", "female", "anti"),
    ("Der Arzt rief den Krankenpfleger.", "The doctor called the nurse.", "nurse", "male", "anti"),
    ("Die Lehrerin lobte den Schüler.", "The student praised the teacher.", "teacher", "female", "pro"),
    ("Der Mechaniker reparierte das Auto.", "The owner thanked the mechanic.", "mechanic", "male", "pro"),
]
for i, (src, ref, occ, gender, stereo) in enumerate(GENDER):
    add(f"gender-{i}", "ambiguity", "de-en", input={
        "kind": "occupation_gender", "gendered_src": src, "ambiguous_ref": ref,
        "female_variant": ref.replace(occ, "female " + occ), "male_variant": ref.replace(occ, "male " + occ),
        "true_gender": gender, "stereotype": stereo})
WSD = [
    ("Was bedeutet „Brühe“?", "stock", "vegetable", "penny", "infrequent"),
    ("Was bedeutet „Flussufer“?", "bank", "river", "savings", "infrequent"),
    ("Was bedeutet „Fledermaus“?", "bat", "fruit", "baseball", "infrequent"),
    ("Was bedeutet „Girokonto“?", "account", "bank", "user", "frequent"),
]
for i, (src, word, good, bad, freq) in enumerate(WSD):
    add(f"wsd-{i}", "ambiguity", "de-en", input={
        "kind": "wsd_template", "unambiguous_src": src, "ambiguous_word": word,
        "correct_cue": good, "wrong_cue": bad, "sense_frequency": freq})

# commonsense: each record yields both variants.
COMMON = [
    ("Die Luft im Haus war kühler als in der Wohnung, weil die Wohnung eine kaputte Klimaanlage hatte.",
     "The air in the house was cooler than in the apartment because the apartment had a broken air conditioner.",
     "The air in the house was cooler than in the apartment because the apartment had a broken air conditioner.",
     "The air in the house was cooler than in the apartment because the house had a broken air conditioner."),
    ("Der Pokal passte nicht in den Koffer, weil der Pokal zu groß war.",
     "The trophy did not fit into the suitcase because the trophy was too big.",
     "The trophy didn't fit into the suitcase because the trophy was too large.",
     "The trophy didn't fit into the suitcase because the suitcase was too large."),
    ("Anna dankte Maria, weil Maria ihr geholfen hatte.",
     "Anna thanked Maria because Maria had helped her.",
     "Anna thanked Maria, because Maria had helped her.",
     "Anna thanked Maria, because Anna had helped her."),
    ("Der Tisch trug die Vase nicht, weil der Tisch zu schwach war.",
     "The table could not hold the vase because the table was too weak.",
     "The table couldn't hold the vase because the table was too weak.",
     "The table couldn't hold the vase because the vase was too weak."),
    ("Der Hund jagte die Katze, weil der Hund hungrig war.",
     "The dog chased the cat because the dog was hungry.",
     "The dog was chasing the cat because the dog was hungry.",
     "The dog was chasing the cat because the cat was hungry."),
]
for i, (src, ref, good, bad) in enumerate(COMMON):
    add(f"common-{i}", "commonsense", "de-en", source=src, reference=ref, good=good, incorrect=bad)

OUT.write_text("".join(json.dumps(r, ensure_ascii=False, sort_keys=False) + "\n" for r in records), encoding="utf-8")
print(f"wrote {len(records)} records to {OUT}")
