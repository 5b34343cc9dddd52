# English source data for the resource builder: ARPAbet -> IPA table, the
# base lexicon (word, category, phones), and explicitly authored extra forms.
#
# Categories drive rule-based inflection in build_resources.py:
#   n   noun: plural -s and possessive -'s derived
#   nx  mass/uncountable noun: possessive only
#   v   regular verb: -s, -ed, -ing derived
#   vi  irregular verb: -s, -ing derived; past forms listed in EXTRAS
#   v0  verb with irregular spelling/phonology: no derivations
#   a   adjective: -er/-est/-ness derived for short ones
#   ax  adjective: no derivations
#   d   adverb, x function word, m number: no derivations

ARPABET_IPA = {
    "AA": "ɑ",
    "AE": "æ",
    "AH": "ʌ",
    "AO": "ɔ",
    "AW": "aʊ",
    "AY": "aɪ",
    "B": "b",
    "CH": "tʃ",
    "D": "d",
    "DH": "ð",
    "EH": "ɛ",
    "ER": "ɝ",
    "EY": "eɪ",
    "F": "f",
    "G": "ɡ",
    "HH": "h",
    "IH": "ɪ",
    "IY": "i",
    "JH": "dʒ",
    "K": "k",
    "L": "l",
    "M": "m",
    "N": "n",
    "NG": "ŋ",
    "OW": "oʊ",
    "OY": "ɔɪ",
    "P": "p",
    "R": "ɹ",
    "S": "s",
    "SH": "ʃ",
    "T": "t",
    "TH": "θ",
    "UH": "ʊ",
    "UW": "u",
    "V": "v",
    "W": "w",
    "Y": "j",
    "Z": "z",
    "ZH": "ʒ",
}

VOWELS = {
    "AA", "AE", "AH", "AO", "AW", "AY", "EH", "ER", "EY",
    "IH", "IY", "OW", "OY", "UH", "UW",
}

# Function words, pronouns, determiners, prepositions, conjunctions, modals,
# numbers: no inflectional derivation.
FUNCTION_BLOCK = """
a  x  AH0
an  x  AE1 N
the  x  DH AH0
of  x  AH1 V
to  x  T UW1
in  x  IH0 N
on  x  AA1 N
at  x  AE1 T
by  x  B AY1
for  x  F AO1 R
with  x  W IH1 DH
from  x  F R AH1 M
into  x  IH1 N T UW0
onto  x  AA1 N T UW0
about  x  AH0 B AW1 T
above  x  AH0 B AH1 V
below  x  B IH0 L OW1
under  x  AH1 N D ER0
over  x  OW1 V ER0
between  x  B IH0 T W IY1 N
among  x  AH0 M AH1 NG
through  x  TH R UW1
during  x  D UH1 R IH0 NG
before  x  B IH0 F AO1 R
after  x  AE1 F T ER0
against  x  AH0 G EH1 N S T
without  x  W IH0 TH AW1 T
within  x  W IH0 TH IH1 N
along  x  AH0 L AO1 NG
across  x  AH0 K R AO1 S
behind  x  B IH0 HH AY1 N D
beside  x  B IH0 S AY1 D
beyond  x  B IH0 AA1 N D
near  x  N IH1 R
off  x  AO1 F
out  x  AW1 T
up  x  AH1 P
down  x  D AW1 N
and  x  AH0 N D
or  x  AO1 R
but  x  B AH1 T
nor  x  N AO1 R
so  x  S OW1
yet  x  Y EH1 T
if  x  IH1 F
because  x  B IH0 K AO1 Z
although  x  AO0 L DH OW1
though  x  DH OW1
while  x  W AY1 L
since  x  S IH1 N S
unless  x  AH0 N L EH1 S
until  x  AH0 N T IH1 L
whether  x  W EH1 DH ER0
that  x  DH AE1 T
which  x  W IH1 CH
who  x  HH UW1
whom  x  HH UW1 M
whose  x  HH UW1 Z
what  x  W AH1 T
when  x  W EH1 N
where  x  W EH1 R
why  x  W AY1
how  x  HH AW1
i  r  AY1
you  r  Y UW1
he  r  HH IY1
she  r  SH IY1
it  r  IH1 T
we  r  W IY1
they  r  DH EY1
me  r  M IY1
him  r  HH IH1 M
her  r  HH ER1
us  r  AH1 S
them  r  DH EH1 M
my  r  M AY1
your  r  Y AO1 R
his  r  HH IH1 Z
its  r  IH1 T S
our  r  AW1 ER0
their  r  DH EH1 R
mine  r  M AY1 N
yours  r  Y AO1 R Z
hers  r  HH ER1 Z
ours  r  AW1 ER0 Z
theirs  r  DH EH1 R Z
myself  r  M AY0 S EH1 L F
yourself  r  Y ER0 S EH1 L F
himself  r  HH IH0 M S EH1 L F
herself  r  HH ER0 S EH1 L F
itself  r  IH0 T S EH1 L F
ourselves  r  AW0 ER0 S EH1 L V Z
themselves  r  DH EH0 M S EH1 L V Z
this  r  DH IH1 S
these  r  DH IY1 Z
those  r  DH OW1 Z
each  r  IY1 CH
every  r  EH1 V ER0 IY0
some  r  S AH1 M
any  r  EH1 N IY0
no  x  N OW1
none  r  N AH1 N
all  r  AO1 L
both  r  B OW1 TH
either  r  IY1 DH ER0
neither  r  N IY1 DH ER0
few  r  F Y UW1
many  r  M EH1 N IY0
much  r  M AH1 CH
more  r  M AO1 R
most  r  M OW1 S T
less  r  L EH1 S
least  r  L IY1 S T
several  r  S EH1 V ER0 AH0 L
other  r  AH1 DH ER0
another  r  AH0 N AH1 DH ER0
such  r  S AH1 CH
same  r  S EY1 M
own  r  OW1 N
something  r  S AH1 M TH IH0 NG
anything  r  EH1 N IY0 TH IH0 NG
nothing  r  N AH1 TH IH0 NG
everything  r  EH1 V R IY0 TH IH0 NG
someone  r  S AH1 M W AH0 N
anyone  r  EH1 N IY0 W AH0 N
everyone  r  EH1 V R IY0 W AH0 N
somebody  r  S AH1 M B AA0 D IY0
anybody  r  EH1 N IY0 B AA0 D IY0
nobody  r  N OW1 B AA0 D IY0
everybody  r  EH1 V R IY0 B AA0 D IY0
somewhere  d  S AH1 M W EH0 R
anywhere  d  EH1 N IY0 W EH0 R
nowhere  d  N OW1 W EH0 R
everywhere  d  EH1 V R IY0 W EH0 R
be  v0  B IY1
am  v0  AE1 M
is  v0  IH1 Z
are  v0  AA1 R
was  v0  W AH1 Z
were  v0  W ER1
been  v0  B IH1 N
being  v0  B IY1 IH0 NG
have  v0  HH AE1 V
has  v0  HH AE1 Z
had  v0  HH AE1 D
having  v0  HH AE1 V IH0 NG
do  v0  D UW1
does  v0  D AH1 Z
did  v0  D IH1 D
doing  v0  D UW1 IH0 NG
done  v0  D AH1 N
go  v0  G OW1
goes  v0  G OW1 Z
going  v0  G OW1 IH0 NG
went  v0  W EH1 N T
gone  v0  G AO1 N
say  v0  S EY1
says  v0  S EH1 Z
saying  v0  S EY1 IH0 NG
said  v0  S EH1 D
will  x  W IH1 L
would  x  W UH1 D
can  x  K AE1 N
could  x  K UH1 D
shall  x  SH AE1 L
should  x  SH UH1 D
may  x  M EY1
might  x  M AY1 T
must  x  M AH1 S T
ought  x  AO1 T
not  d  N AA1 T
never  d  N EH1 V ER0
always  d  AO1 L W EY0 Z
often  d  AO1 F AH0 N
sometimes  d  S AH1 M T AY0 M Z
usually  d  Y UW1 ZH AH0 W AH0 L IY0
rarely  d  R EH1 R L IY0
seldom  d  S EH1 L D AH0 M
again  d  AH0 G EH1 N
already  d  AO0 L R EH1 D IY0
almost  d  AO1 L M OW0 S T
also  d  AO1 L S OW0
too  d  T UW1
very  d  V EH1 R IY0
quite  d  K W AY1 T
rather  d  R AE1 DH ER0
really  d  R IH1 L IY0
just  d  JH AH1 S T
only  d  OW1 N L IY0
even  d  IY1 V IH0 N
still  d  S T IH1 L
now  d  N AW1
then  d  DH EH1 N
here  d  HH IY1 R
there  d  DH EH1 R
today  d  T AH0 D EY1
tomorrow  d  T AH0 M AA1 R OW0
yesterday  d  Y EH1 S T ER0 D EY0
tonight  d  T AH0 N AY1 T
soon  d  S UW1 N
later  d  L EY1 T ER0
early  d  ER1 L IY0
late  d  L EY1 T
once  d  W AH1 N S
twice  d  T W AY1 S
together  d  T AH0 G EH1 DH ER0
apart  d  AH0 P AA1 R T
away  d  AH0 W EY1
back  d  B AE1 K
forward  d  F AO1 R W ER0 D
instead  d  IH0 N S T EH1 D
perhaps  d  P ER0 HH AE1 P S
maybe  d  M EY1 B IY0
however  d  HH AW0 EH1 V ER0
therefore  d  DH EH1 R F AO0 R
anyway  d  EH1 N IY0 W EY0
indeed  d  IH0 N D IY1 D
especially  d  AH0 S P EH1 SH AH0 L IY0
probably  d  P R AA1 B AH0 B L IY0
certainly  d  S ER1 T AH0 N L IY0
suddenly  d  S AH1 D AH0 N L IY0
quickly  d  K W IH1 K L IY0
slowly  d  S L OW1 L IY0
quietly  d  K W AY1 AH0 T L IY0
loudly  d  L AW1 D L IY0
carefully  d  K EH1 R F AH0 L IY0
easily  d  IY1 Z AH0 L IY0
simply  d  S IH1 M P L IY0
clearly  d  K L IH1 R L IY0
exactly  d  IH0 G Z AE1 K T L IY0
finally  d  F AY1 N AH0 L IY0
actually  d  AE1 K CH UW0 AH0 L IY0
recently  d  R IY1 S AH0 N T L IY0
currently  d  K ER1 AH0 N T L IY0
directly  d  D ER0 EH1 K T L IY0
nearly  d  N IH1 R L IY0
mostly  d  M OW1 S T L IY0
truly  d  T R UW1 L IY0
badly  d  B AE1 D L IY0
deeply  d  D IY1 P L IY0
gently  d  JH EH1 N T L IY0
hardly  d  HH AA1 R D L IY0
likely  d  L AY1 K L IY0
strongly  d  S T R AO1 NG L IY0
safely  d  S EY1 F L IY0
surely  d  SH UH1 R L IY0
widely  d  W AY1 D L IY0
yes  d  Y EH1 S
okay  d  OW2 K EY1
please  d  P L IY1 Z
hello  x  HH AH0 L OW1
hi  x  HH AY1
goodbye  x  G UH2 D B AY1
bye  x  B AY1
thanks  x  TH AE1 NG K S
oh  x  OW1
zero  m  Z IH1 R OW0
one  m  W AH1 N
two  m  T UW1
three  m  TH R IY1
four  m  F AO1 R
five  m  F AY1 V
six  m  S IH1 K S
seven  m  S EH1 V AH0 N
eight  m  EY1 T
nine  m  N AY1 N
ten  m  T EH1 N
eleven  m  IH0 L EH1 V AH0 N
twelve  m  T W EH1 L V
thirteen  m  TH ER1 T IY1 N
fourteen  m  F AO1 R T IY1 N
fifteen  m  F IH0 F T IY1 N
sixteen  m  S IH0 K S T IY1 N
seventeen  m  S EH1 V AH0 N T IY1 N
eighteen  m  EY0 T IY1 N
nineteen  m  N AY1 N T IY1 N
twenty  m  T W EH1 N T IY0
thirty  m  TH ER1 T IY0
forty  m  F AO1 R T IY0
fifty  m  F IH1 F T IY0
sixty  m  S IH1 K S T IY0
seventy  m  S EH1 V AH0 N T IY0
eighty  m  EY1 T IY0
ninety  m  N AY1 N T IY0
hundred  m  HH AH1 N D R AH0 D
thousand  m  TH AW1 Z AH0 N D
million  m  M IH1 L Y AH0 N
billion  m  B IH1 L Y AH0 N
first  m  F ER1 S T
second  m  S EH1 K AH0 N D
third  m  TH ER1 D
fourth  m  F AO1 R TH
fifth  m  F IH1 F TH
sixth  m  S IH1 K S TH
seventh  m  S EH1 V AH0 N TH
eighth  m  EY1 T TH
ninth  m  N AY1 N TH
tenth  m  T EH1 N TH
half  m  HH AE1 F
quarter  m  K W AO1 R T ER0
dozen  m  D AH1 Z AH0 N
"""

# Irregular verb forms, irregular plurals, contractions, interjection-ish
# words, compounds, agent nouns, and tech vocabulary common in code-switched
# Mandarin text. One entry per line, no derivation.
EXTRAS_BLOCK = """
took  x  T UH1 K
taken  x  T EY1 K AH0 N
made  x  M EY1 D
came  x  K EY1 M
saw  x  S AO1
seen  x  S IY1 N
got  x  G AA1 T
gotten  x  G AA1 T AH0 N
knew  x  N UW1
known  x  N OW1 N
thought  x  TH AO1 T
told  x  T OW1 L D
found  x  F AW1 N D
gave  x  G EY1 V
given  x  G IH1 V AH0 N
left  x  L EH1 F T
felt  x  F EH1 L T
brought  x  B R AO1 T
began  x  B IH0 G AE1 N
begun  x  B IH0 G AH1 N
kept  x  K EH1 P T
held  x  HH EH1 L D
wrote  x  R OW1 T
written  x  R IH1 T AH0 N
stood  x  S T UH1 D
heard  x  HH ER1 D
let  x  L EH1 T
meant  x  M EH1 N T
met  x  M EH1 T
ran  x  R AE1 N
paid  x  P EY1 D
sat  x  S AE1 T
spoke  x  S P OW1 K
spoken  x  S P OW1 K AH0 N
lay  x  L EY1
lain  x  L EY1 N
led  x  L EH1 D
grew  x  G R UW1
grown  x  G R OW1 N
lost  x  L AO1 S T
fell  x  F EH1 L
fallen  x  F AO1 L AH0 N
sent  x  S EH1 N T
built  x  B IH1 L T
understood  x  AH2 N D ER0 S T UH1 D
drew  x  D R UW1
drawn  x  D R AO1 N
broke  x  B R OW1 K
broken  x  B R OW1 K AH0 N
spent  x  S P EH1 N T
rose  x  R OW1 Z
risen  x  R IH1 Z AH0 N
drove  x  D R OW1 V
driven  x  D R IH1 V AH0 N
bought  x  B AO1 T
wore  x  W AO1 R
worn  x  W AO1 R N
chose  x  CH OW1 Z
chosen  x  CH OW1 Z AH0 N
ate  x  EY1 T
eaten  x  IY1 T AH0 N
fought  x  F AO1 T
threw  x  TH R UW1
thrown  x  TH R OW1 N
caught  x  K AO1 T
dealt  x  D EH1 L T
won  x  W AH1 N
forgot  x  F ER0 G AA1 T
forgotten  x  F ER0 G AA1 T AH0 N
laid  x  L EY1 D
sold  x  S OW1 L D
shook  x  SH UH1 K
shaken  x  SH EY1 K AH0 N
shone  x  SH OW1 N
shot  x  SH AA1 T
sang  x  S AE1 NG
sung  x  S AH1 NG
sank  x  S AE1 NG K
sunk  x  S AH1 NG K
slept  x  S L EH1 P T
slid  x  S L IH1 D
spun  x  S P AH1 N
sprang  x  S P R AE1 NG
sprung  x  S P R AH1 NG
stole  x  S T OW1 L
stolen  x  S T OW1 L AH0 N
stuck  x  S T AH1 K
stung  x  S T AH1 NG
struck  x  S T R AH1 K
swore  x  S W AO1 R
sworn  x  S W AO1 R N
swept  x  S W EH1 P T
swam  x  S W AE1 M
swum  x  S W AH1 M
swung  x  S W AH1 NG
taught  x  T AO1 T
tore  x  T AO1 R
torn  x  T AO1 R N
woke  x  W OW1 K
woken  x  W OW1 K AH0 N
wept  x  W EH1 P T
bent  x  B EH1 N T
bound  x  B AW1 N D
bled  x  B L EH1 D
blew  x  B L UW1
blown  x  B L OW1 N
bred  x  B R EH1 D
burst  x  B ER1 S T
cost  x  K AO1 S T
crept  x  K R EH1 P T
dug  x  D AH1 G
fed  x  F EH1 D
fled  x  F L EH1 D
flew  x  F L UW1
flown  x  F L OW1 N
forbade  x  F ER0 B EY1 D
forbidden  x  F ER0 B IH1 D AH0 N
froze  x  F R OW1 Z
frozen  x  F R OW1 Z AH0 N
hid  x  HH IH1 D
hidden  x  HH IH1 D AH0 N
hit  x  HH IH1 T
hung  x  HH AH1 NG
hurt  x  HH ER1 T
lent  x  L EH1 N T
lit  x  L IH1 T
quit  x  K W IH1 T
rode  x  R OW1 D
ridden  x  R IH1 D AH0 N
rang  x  R AE1 NG
rung  x  R AH1 NG
set  x  S EH1 T
shut  x  SH AH1 T
spat  x  S P AE1 T
split  x  S P L IH1 T
swelled  x  S W EH1 L D
swollen  x  S W OW1 L AH0 N
bore  x  B AO1 R
born  x  B AO1 R N
beat  x  B IY1 T
beaten  x  B IY1 T AH0 N
became  x  B IH0 K EY1 M
become  x  B IH0 K AH1 M
men  x  M EH1 N
women  x  W IH1 M AH0 N
children  x  CH IH1 L D R AH0 N
feet  x  F IY1 T
teeth  x  T IY1 TH
geese  x  G IY1 S
mice  x  M AY1 S
oxen  x  AA1 K S AH0 N
people  n  P IY1 P AH0 L
knives  x  N AY1 V Z
wives  x  W AY1 V Z
lives  x  L AY1 V Z
leaves  x  L IY1 V Z
wolves  x  W UH1 L V Z
shelves  x  SH EH1 L V Z
halves  x  HH AE1 V Z
thieves  x  TH IY1 V Z
loaves  x  L OW1 V Z
calves  x  K AE1 V Z
potatoes  x  P AH0 T EY1 T OW0 Z
tomatoes  x  T AH0 M EY1 T OW0 Z
heroes  x  HH IH1 R OW0 Z
echoes  x  EH1 K OW0 Z
don't  x  D OW1 N T
doesn't  x  D AH1 Z AH0 N T
didn't  x  D IH1 D AH0 N T
can't  x  K AE1 N T
couldn't  x  K UH1 D AH0 N T
won't  x  W OW1 N T
wouldn't  x  W UH1 D AH0 N T
shouldn't  x  SH UH1 D AH0 N T
isn't  x  IH1 Z AH0 N T
aren't  x  AA1 R AH0 N T
wasn't  x  W AH1 Z AH0 N T
weren't  x  W ER1 AH0 N T
hasn't  x  HH AE1 Z AH0 N T
haven't  x  HH AE1 V AH0 N T
hadn't  x  HH AE1 D AH0 N T
mustn't  x  M AH1 S AH0 N T
i'm  x  AY1 M
i've  x  AY1 V
i'll  x  AY1 L
i'd  x  AY1 D
you're  x  Y UH1 R
you've  x  Y UW1 V
you'll  x  Y UW1 L
you'd  x  Y UW1 D
he's  x  HH IY1 Z
he'll  x  HH IY1 L
he'd  x  HH IY1 D
she's  x  SH IY1 Z
she'll  x  SH IY1 L
she'd  x  SH IY1 D
it's  x  IH1 T S
it'll  x  IH1 T AH0 L
we're  x  W IY1 R
we've  x  W IY1 V
we'll  x  W IY1 L
we'd  x  W IY1 D
they're  x  DH EH1 R
they've  x  DH EY1 V
they'll  x  DH EY1 L
they'd  x  DH EY1 D
that's  x  DH AE1 T S
there's  x  DH EH1 R Z
here's  x  HH IY1 R Z
what's  x  W AH1 T S
who's  x  HH UW1 Z
where's  x  W EH1 R Z
let's  x  L EH1 T S
o'clock  x  AH0 K L AA1 K
ma'am  x  M AE1 M
wifi  n  W AY1 F AY2
internet  n  IH1 N T ER0 N EH2 T
email  n  IY1 M EY2 L
online  a  AO1 N L AY2 N
offline  a  AO1 F L AY2 N
website  n  W EH1 B S AY2 T
software  nx  S AO1 F T W EH2 R
hardware  nx  HH AA1 R D W EH2 R
database  n  D EY1 T AH0 B EY2 S
laptop  n  L AE1 P T AA2 P
desktop  n  D EH1 S K T AA2 P
smartphone  n  S M AA1 R T F OW2 N
iphone  n  AY1 F OW2 N
android  n  AE1 N D R OY2 D
bluetooth  nx  B L UW1 T UW2 TH
password  n  P AE1 S W ER2 D
username  n  Y UW1 Z ER0 N EY2 M
login  n  L AO1 G IH2 N
logout  n  L AO1 G AW2 T
download  v  D AW1 N L OW2 D
upload  v  AH1 P L OW2 D
update  v  AH0 P D EY1 T
upgrade  v  AH0 P G R EY1 D
app  n  AE1 P
blog  n  B L AO1 G
chat  n  CH AE1 T
click  v  K L IH1 K
browser  n  B R AW1 Z ER0
server  n  S ER1 V ER0
router  n  R AW1 T ER0
pixel  n  P IH1 K S AH0 L
video  n  V IH1 D IY0 OW0
audio  nx  AO1 D IY0 OW0
radio  n  R EY1 D IY0 OW0
photo  n  F OW1 T OW0
piano  n  P IY0 AE1 N OW0
studio  n  S T UW1 D IY0 OW0
zoo  n  Z UW1
taxi  n  T AE1 K S IY0
menu  n  M EH1 N Y UW0
visa  n  V IY1 Z AH0
sofa  n  S OW1 F AH0
pizza  n  P IY1 T S AH0
coffee  n  K AO1 F IY0
okay  x  OW2 K EY1
teacher  n  T IY1 CH ER0
worker  n  W ER1 K ER0
player  n  P L EY1 ER0
singer  n  S IH1 NG ER0
dancer  n  D AE1 N S ER0
writer  n  R AY1 T ER0
reader  n  R IY1 D ER0
speaker  n  S P IY1 K ER0
driver  n  D R AY1 V ER0
runner  n  R AH1 N ER0
swimmer  n  S W IH1 M ER0
winner  n  W IH1 N ER0
loser  n  L UW1 Z ER0
leader  n  L IY1 D ER0
manager  n  M AE1 N IH0 JH ER0
builder  n  B IH1 L D ER0
farmer  n  F AA1 R M ER0
painter  n  P EY1 N T ER0
hunter  n  HH AH1 N T ER0
keeper  n  K IY1 P ER0
helper  n  HH EH1 L P ER0
owner  n  OW1 N ER0
maker  n  M EY1 K ER0
seller  n  S EH1 L ER0
buyer  n  B AY1 ER0
visitor  n  V IH1 Z IH0 T ER0
listener  n  L IH1 S AH0 N ER0
beginner  n  B IH0 G IH1 N ER0
engineer  n  EH2 N JH AH0 N IH1 R
scientist  n  S AY1 AH0 N T IH0 S T
artist  n  AA1 R T IH0 S T
tourist  n  T UH1 R IH0 S T
dentist  n  D EH1 N T IH0 S T
pianist  n  P IY0 AE1 N IH0 S T
musician  n  M Y UW0 Z IH1 SH AH0 N
physician  n  F IH0 Z IH1 SH AH0 N
technician  n  T EH0 K N IH1 SH AH0 N
librarian  n  L AY0 B R EH1 R IY0 AH0 N
professor  n  P R AH0 F EH1 S ER0
actor  n  AE1 K T ER0
actress  n  AE1 K T R AH0 S
waiter  n  W EY1 T ER0
waitress  n  W EY1 T R AH0 S
princess  n  P R IH1 N S EH0 S
businessman  n  B IH1 Z N AH0 S M AE2 N
policeman  n  P AH0 L IY1 S M AH0 N
fireman  n  F AY1 R M AH0 N
postman  n  P OW1 S T M AH0 N
classroom  n  K L AE1 S R UW2 M
bathroom  n  B AE1 TH R UW2 M
bedroom  n  B EH1 D R UW2 M
playground  n  P L EY1 G R AW2 N D
airport  n  EH1 R P AO2 R T
seaside  n  S IY1 S AY2 D
sunshine  nx  S AH1 N SH AY2 N
sunlight  nx  S AH1 N L AY2 T
moonlight  nx  M UW1 N L AY2 T
daylight  nx  D EY1 L AY2 T
birthday  n  B ER1 TH D EY2
weekend  n  W IY1 K EH2 N D
weekday  n  W IY1 K D EY2
holiday  n  HH AA1 L AH0 D EY2
homework  nx  HH OW1 M W ER2 K
housework  nx  HH AW1 S W ER2 K
network  n  N EH1 T W ER2 K
framework  n  F R EY1 M W ER2 K
notebook  n  N OW1 T B UH2 K
textbook  n  T EH1 K S T B UH2 K
handbook  n  HH AE1 N D B UH2 K
newspaper  n  N UW1 Z P EY2 P ER0
magazine  n  M AE1 G AH0 Z IY2 N
television  n  T EH1 L AH0 V IH2 ZH AH0 N
telephone  n  T EH1 L AH0 F OW2 N
microphone  n  M AY1 K R AH0 F OW2 N
computer  n  K AH0 M P Y UW1 T ER0
calculator  n  K AE1 L K Y AH0 L EY2 T ER0
refrigerator  n  R IH0 F R IH1 JH ER0 EY2 T ER0
elevator  n  EH1 L AH0 V EY2 T ER0
escalator  n  EH1 S K AH0 L EY2 T ER0
basketball  n  B AE1 S K AH0 T B AO2 L
football  n  F UH1 T B AO2 L
baseball  n  B EY1 S B AO2 L
volleyball  n  V AA1 L IY0 B AO2 L
butterfly  n  B AH1 T ER0 F L AY2
dragonfly  n  D R AE1 G AH0 N F L AY2
grasshopper  n  G R AE1 S HH AA2 P ER0
waterfall  n  W AO1 T ER0 F AO2 L
thunderstorm  n  TH AH1 N D ER0 S T AO2 R M
rainbow  n  R EY1 N B OW2
raincoat  n  R EY1 N K OW2 T
snowman  n  S N OW1 M AE2 N
firework  n  F AY1 R W ER2 K
fireplace  n  F AY1 R P L EY2 S
airplane  n  EH1 R P L EY2 N
spaceship  n  S P EY1 S SH IH2 P
highway  n  HH AY1 W EY2
railway  n  R EY1 L W EY2
subway  n  S AH1 B W EY2
sidewalk  n  S AY1 D W AO2 K
crossroad  n  K R AO1 S R OW2 D
downtown  n  D AW1 N T AW1 N
upstairs  d  AH1 P S T EH1 R Z
downstairs  d  D AW1 N S T EH1 R Z
outside  d  AW1 T S AY1 D
inside  d  IH0 N S AY1 D
overseas  d  OW1 V ER0 S IY1 Z
abroad  d  AH0 B R AO1 D
aloud  d  AH0 L AW1 D
asleep  ax  AH0 S L IY1 P
awake  ax  AH0 W EY1 K
alive  ax  AH0 L AY1 V
alone  ax  AH0 L OW1 N
afraid  ax  AH0 F R EY1 D
aware  ax  AH0 W EH1 R
ahead  d  AH0 HH EH1 D
around  d  ER0 AW1 N D
everyday  ax  EH1 V R IY0 D EY2
anymore  d  EH2 N IY0 M AO1 R
"""
