"""Writes articles.jsonl and gold.jsonl for the 50-article synthetic corpus.

The gold pairs below are hand annotations; spans are located by string
search. Long forms are annotated at whole-token boundaries, so an elided
article stays attached ("l'Organisation des Nations unies").
"""

import json
from pathlib import Path

HERE = Path(__file__).resolve().parent
IMF = "International Monetary Fund"
A = []  # (id, lang, date, source, category, text, [(sf, lf), ...])
def add(i, lang, date, src, cat, text, pairs):
    A.append((i, lang, date, src, cat, text, pairs))

# ---- English (20) ----
add("en-01","en","2012-01-03","wire-a","economy",
 "The International Monetary Fund (IMF) cut its growth forecast on Tuesday. Officials at the European Central Bank (ECB) said they would keep rates unchanged.",
 [("IMF",IMF),("ECB","European Central Bank")])
add("en-02","en","2012-01-04","wire-b","politics",
 "Aid to the Central African Republic (CAR) was discussed in Geneva. A loan from the International Monetary Fund (IMF) is expected next month.",
 [("CAR","Central African Republic"),("IMF",IMF)])
add("en-03","en","2012-01-05","wire-a","economy",
 "Greece asked the International Monetary Fund (IMF) for more time. Markets rose slightly after the announcement.",
 [("IMF",IMF)])
add("en-04","en","2012-01-06","daily-c","economy",
 "Analysts said the International Monetary Fund (IMF) had been too optimistic. A blog post about the international monetary fund (imf) went viral.",
 [("IMF",IMF)])
add("en-05","en","2012-01-09","daily-c","science",
 "Researchers at the Center for Autism Research (CAR) published new findings. The International Monetary Fund (IMF) was not involved.",
 [("CAR","Center for Autism Research"),("IMF",IMF)])
add("en-06","en","2012-01-10","wire-b","economy",
 "Talks with the International Monetary Fund (IMF) resumed in Lisbon. No agreement was reached.",
 [("IMF",IMF)])
add("en-07","en","2012-01-11","wire-a","politics",
 "Some older texts call it the United Nations Organization (UNO) instead. The International Monetary Fund (IMF) welcomed the report.",
 [("UNO","United Nations Organization"),("IMF",IMF)])
add("en-08","en","2012-01-12","daily-c","politics",
 "A local paper wrote about the United Nations Organization (Uno) in its editorial. Later the International Monetary Fund (IMF) replied.",
 [("Uno","United Nations Organization"),("IMF",IMF)])
add("en-09","en","2012-01-13","wire-b","economy",
 "Both the International Monetary Fund (IMF) and the European Central Bank (ECB) issued statements.",
 [("IMF",IMF),("ECB","European Central Bank")])
add("en-10","en","2012-01-16","wire-a","economy",
 "In its report (2010) the International Monetary Fund (IMF) listed several risks. One chart was labelled (x) by mistake.",
 [("IMF",IMF)])
add("en-11","en","2012-01-17","wire-b","economy",
 "Ireland repaid part of its loan to the International Monetary Fund (IMF) early.",
 [("IMF",IMF)])
add("en-12","en","2012-01-18","daily-c","culture",
 "A historian praised the United Nations Organization (U.N.O.) for its early work. She also teaches Computer Assisted Reporting (CAR) at a journalism school.",
 [("U.N.O.","United Nations Organization"),("CAR","Computer Assisted Reporting")])
add("en-13","en","2012-01-19","wire-a","politics",
 "Elections in Uttar Pradesh (UP) drew a record turnout.",
 [("UP","Uttar Pradesh")])
add("en-14","en","2012-01-20","wire-b","politics",
 "The chief minister of Uttar Pradesh (U.P.) met investors. The European Central Bank (ECB) was mentioned only briefly.",
 [("U.P.","Uttar Pradesh"),("ECB","European Central Bank")])
add("en-15","en","2012-01-23","daily-c","science",
 "Peacekeepers left the Central African Republic (CAR) last year. Engineers used Remotely Operated Vehicles (ROVs) to inspect the pipeline.",
 [("CAR","Central African Republic"),("ROVs","Remotely Operated Vehicles")])
add("en-16","en","2012-01-24","wire-a","economy",
 "Figures from Eurostat (ES) were revised. The meeting was held on the first working day of the week (Monday). The deal was worth about (US$5m) in total.",
 [])
add("en-17","en","2012-01-25","wire-b","culture",
 "The band Alpha Beta (A B) played a short set. Critics called it a night of (one two three) surprises.",
 [])
add("en-18","en","2012-01-26","daily-c","sport",
 "The home side won the match by two goals. Fans celebrated in the streets until late.",
 [])
add("en-19","en","2012-01-27","wire-a","sport",
 "Rain delayed the final round. The organisers apologised to spectators.",
 [])
add("en-20","en","2012-01-30","wire-b","weather",
 "Heavy snow closed several roads in the north. Schools remained open.",
 [])

# ---- German (12) ----
add("de-01","de","2012-02-01","zeitung-a","wirtschaft",
 "Die Europäische Zentralbank (EZB) senkte den Leitzins. Der Internationaler Währungsfonds (IWF) begrüßte die Entscheidung.",
 [("EZB","Europäische Zentralbank"),("IWF","Internationaler Währungsfonds")])
add("de-02","de","2012-02-02","zeitung-b","wirtschaft",
 "Die Europäische Zentralbank (EZB) kauft weiter Anleihen.",
 [("EZB","Europäische Zentralbank")])
add("de-03","de","2012-02-03","zeitung-a","politik",
 "Ein Sprecher der Europäische Zentralbank (EZB) äußerte sich nicht. Die Sozialdemokratische Partei Deutschlands (SPD) forderte Aufklärung.",
 [("EZB","Europäische Zentralbank"),("SPD","Sozialdemokratische Partei Deutschlands")])
add("de-04","de","2012-02-06","zeitung-b","wirtschaft",
 "Der Chef des Internationalen Währungsfonds (IWF) reiste nach Athen.",
 [("IWF","Internationalen Währungsfonds")])
add("de-05","de","2012-02-07","zeitung-a","politik",
 "Die Sozialdemokratische Partei Deutschlands (SPD) stellte ihr Programm vor.",
 [("SPD","Sozialdemokratische Partei Deutschlands")])
add("de-06","de","2012-02-08","zeitung-b","politik",
 "Die Vereinigte Nationen (UNO) tagte in New York.",
 [])
add("de-07","de","2012-02-09","zeitung-a","politik",
 "Die Nordatlantikpakt-Organisation (Nato) plant ein Manöver.",
 [])
add("de-08","de","2012-02-10","zeitung-b","sport",
 "Der Verein gewann das Spiel knapp. Die Fans jubelten.",
 [])
add("de-09","de","2012-02-13","zeitung-a","wetter",
 "Am Wochenende wird es kalt. Im Süden fällt Schnee.",
 [])
add("de-10","de","2012-02-14","zeitung-b","kultur",
 "Das Museum zeigt eine neue Ausstellung.",
 [])
add("de-11","de","2012-02-15","zeitung-a","kultur",
 "Der Roman erschien im Jahr (2011) und wurde ein Erfolg.",
 [])
add("de-12","de","2012-02-16","zeitung-b","sport",
 "Die Mannschaft verlor auswärts.",
 [])

# ---- French (10) ----
add("fr-01","fr","2012-03-01","journal-a","économie",
 "La Banque centrale européenne (BCE) a maintenu ses taux. Le Fonds monétaire international (FMI) a salué cette décision.",
 [("BCE","Banque centrale européenne"),("FMI","Fonds monétaire international")])
add("fr-02","fr","2012-03-02","journal-b","économie",
 "Le Fonds monétaire international (FMI) publie ses prévisions.",
 [("FMI","Fonds monétaire international")])
add("fr-03","fr","2012-03-05","journal-a","politique",
 "Le Fonds monétaire international (FMI) et l'Organisation des Nations unies (ONU) ont signé un accord.",
 [("FMI","Fonds monétaire international"),("ONU","l'Organisation des Nations unies")])
add("fr-04","fr","2012-03-06","journal-b","économie",
 "La Banque centrale européenne (BCE) reste prudente.",
 [("BCE","Banque centrale européenne")])
add("fr-05","fr","2012-03-07","journal-a","politique",
 "Le rapport de l'Organisation des Nations unies (Onu) sera publié demain.",
 [("Onu","l'Organisation des Nations unies")])
add("fr-06","fr","2012-03-08","journal-b","culture",
 "Le film est sorti en (2011) dans peu de salles.",
 [])
add("fr-07","fr","2012-03-09","journal-a","sport",
 "Le club a remporté la coupe.",
 [])
add("fr-08","fr","2012-03-12","journal-b","sport",
 "Les supporters ont fêté la victoire.",
 [])
add("fr-09","fr","2012-03-13","journal-a","météo",
 "Il pleuvra sur tout le pays.",
 [])
add("fr-10","fr","2012-03-14","journal-b","culture",
 "Le musée ouvre une nouvelle salle.",
 [])

# ---- Italian (8) ----
add("it-01","it","2012-04-02","giornale-a","esteri",
 "Secondo fonti diplomatiche, l'Agenzia internazionale per l'energia atomica (AIEA) ha inviato ispettori. La Banca centrale europea (BCE) ha commentato.",
 [("AIEA","l'Agenzia internazionale per l'energia atomica"),("BCE","Banca centrale europea")])
add("it-02","it","2012-04-03","giornale-b","esteri",
 "Secondo l'Agenzia internazionale per l'energia atomica (AIEA) non ci sono violazioni.",
 [("AIEA","l'Agenzia internazionale per l'energia atomica")])
add("it-03","it","2012-04-04","giornale-a","economia",
 "La Banca centrale europea (BCE) e il Fondo monetario internazionale (FMI) hanno discusso.",
 [("BCE","Banca centrale europea"),("FMI","Fondo monetario internazionale")])
add("it-04","it","2012-04-05","giornale-b","cultura",
 "Il libro (x) è stato ristampato.",
 [])
add("it-05","it","2012-04-06","giornale-a","sport",
 "La squadra ha vinto in trasferta.",
 [])
add("it-06","it","2012-04-09","giornale-b","sport",
 "I tifosi hanno festeggiato a lungo.",
 [])
add("it-07","it","2012-04-10","giornale-a","meteo",
 "Domani tornerà il sole.",
 [])
add("it-08","it","2012-04-11","giornale-b","cultura",
 "Il teatro riapre dopo i lavori.",
 [])

assert len(A) == 50, len(A)
with open(HERE / "articles.jsonl","w") as fa, open(HERE / "gold.jsonl","w") as fg:
    for i, lang, date, src, cat, text, pairs in A:
        fa.write(json.dumps({"id":i,"language":lang,"date":date,"source":src,"category":cat,"text":text}, ensure_ascii=False)+"\n")
        gp=[]; cursor=0
        for sf, lf in pairs:
            needle = f"{lf} ({sf})"
            k = text.find(needle, cursor)
            assert k >= 0, (i, needle)
            gp.append({"sf":sf,"lf":lf,"lf_span":[k,k+len(lf)],"sf_span":[k+len(lf)+2,k+len(lf)+2+len(sf)]})
            cursor = k+len(needle)
        fg.write(json.dumps({"article_id":i,"language":lang,"pairs":gp}, ensure_ascii=False)+"\n")
