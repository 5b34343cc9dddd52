# Base English lexicon: word, category, ARPAbet phones with stress digits.
# Regular verbs (v) get -s/-ed/-ing, irregular verbs (vi) get -s/-ing with
# past forms listed in english_data.EXTRAS_BLOCK, nouns (n) get -s/-'s,
# mass nouns (nx) get -'s, short adjectives (a) get -er/-est/-ness.

VERB_BLOCK = """
walk  v  W AO1 K
talk  v  T AO1 K
work  v  W ER1 K
play  v  P L EY1
look  v  L UH1 K
want  v  W AA1 N T
need  v  N IY1 D
like  v  L AY1 K
love  v  L AH1 V
help  v  HH EH1 L P
call  v  K AO1 L
ask  v  AE1 S K
answer  v  AE1 N S ER0
open  v  OW1 P AH0 N
close  v  K L OW1 Z
start  v  S T AA1 R T
stop  v  S T AA1 P
move  v  M UW1 V
turn  v  T ER1 N
live  v  L IH1 V
stay  v  S T EY1
wait  v  W EY1 T
watch  v  W AA1 CH
listen  v  L IH1 S AH0 N
learn  v  L ER1 N
study  v  S T AH1 D IY0
remember  v  R IH0 M EH1 M B ER0
use  v  Y UW1 Z
try  v  T R AY1
seem  v  S IY1 M
show  v  SH OW1
ask  v  AE1 S K
follow  v  F AA1 L OW0
change  v  CH EY1 N JH
happen  v  HH AE1 P AH0 N
offer  v  AO1 F ER0
appear  v  AH0 P IH1 R
believe  v  B IH0 L IY1 V
allow  v  AH0 L AW1 D
add  v  AE1 D
expect  v  IH0 K S P EH1 K T
suggest  v  S AH0 G JH EH1 S T
continue  v  K AH0 N T IH1 N Y UW0
include  v  IH0 N K L UW1 D
decide  v  D IH0 S AY1 D
explain  v  IH0 K S P L EY1 N
hope  v  HH OW1 P
create  v  K R IY0 EY1 T
remain  v  R IH0 M EY1 N
consider  v  K AH0 N S IH1 D ER0
require  v  R IY0 K W AY1 ER0
report  v  R IH0 P AO1 R T
receive  v  R AH0 S IY1 V
return  v  R IH0 T ER1 N
reach  v  R IY1 CH
agree  v  AH0 G R IY1
support  v  S AH0 P AO1 R T
serve  v  S ER1 V
die  v0  D AY1
cover  v  K AH1 V ER0
describe  v  D IH0 S K R AY1 B
produce  v  P R AH0 D UW1 S
pull  v  P UH1 L
push  v  P UH1 SH
raise  v  R EY1 Z
pass  v  P AE1 S
accept  v  AE0 K S EH1 P T
cause  v  K AO1 Z
share  v  SH EH1 R
save  v  S EY1 V
visit  v  V IH1 Z IH0 T
carry  v  K AE1 R IY0
plan  v  P L AE1 N
point  v  P OY1 N T
check  v  CH EH1 K
cook  v  K UH1 K
clean  v  K L IY1 N
wash  v  W AA1 SH
dry  v  D R AY1
fill  v  F IH1 L
empty  v  EH1 M P T IY0
fix  v  F IH1 K S
repair  v  R IH0 P EH1 R
paint  v  P EY1 N T
draw  vi  D R AO1
pick  v  P IH1 K
drop  v  D R AA1 P
lift  v  L IH1 F T
climb  v  K L AY1 M
jump  v  JH AH1 M P
dance  v  D AE1 N S
smile  v  S M AY1 L
laugh  v  L AE1 F
cry  v  K R AY1
shout  v  SH AW1 T
whisper  v  W IH1 S P ER0
sound  v  S AW1 N D
smell  v  S M EH1 L
taste  v  T EY1 S T
touch  v  T AH1 CH
feel  vi  F IY1 L
notice  v  N OW1 T IH0 S
recognize  v  R EH1 K AH0 G N AY2 Z
realize  v  R IY1 AH0 L AY2 Z
imagine  v  IH0 M AE1 JH AH0 N
wonder  v  W AH1 N D ER0
guess  v  G EH1 S
suppose  v  S AH0 P OW1 Z
doubt  v  D AW1 T
promise  v  P R AA1 M AH0 S
refuse  v  R IH0 F Y UW1 Z
apologize  v  AH0 P AA1 L AH0 JH AY2 Z
thank  v  TH AE1 NG K
welcome  v  W EH1 L K AH0 M
invite  v  IH0 N V AY1 T
join  v  JH OY1 N
attend  v  AH0 T EH1 N D
arrive  v  ER0 AY1 V
enter  v  EH1 N T ER0
exit  v  EH1 G Z IH0 T
travel  v  T R AE1 V AH0 L
drive  vi  D R AY1 V
ride  vi  R AY1 D
fly  vi  F L AY1
sail  v  S EY1 L
land  v  L AE1 N D
cross  v  K R AO1 S
pack  v  P AE1 K
deliver  v  D IH0 L IH1 V ER0
post  v  P OW1 S T
mail  v  M EY1 L
print  v  P R IH1 N T
copy  v  K AA1 P IY0
type  v  T AY1 P
record  v  R IH0 K AO1 R D
measure  v  M EH1 ZH ER0
count  v  K AW1 N T
weigh  v  W EY1
compare  v  K AH0 M P EH1 R
test  v  T EH1 S T
solve  v  S AA1 L V
search  v  S ER1 CH
discover  v  D IH0 S K AH1 V ER0
invent  v  IH0 N V EH1 N T
design  v  D IH0 Z AY1 N
develop  v  D IH0 V EH1 L AH0 P
improve  v  IH0 M P R UW1 V
increase  v  IH0 N K R IY1 S
reduce  v  R IH0 D UW1 S
protect  v  P R AH0 T EH1 K T
destroy  v  D IH0 S T R OY1
damage  v  D AE1 M AH0 JH
burn  v  B ER1 N
pour  v  P AO1 R
mix  v  M IH1 K S
boil  v  B OY1 L
bake  v  B EY1 K
fry  v  F R AY1
serve  v  S ER1 V
order  v  AO1 R D ER0
prepare  v  P R IY0 P EH1 R
finish  v  F IH1 N IH0 SH
complete  v  K AH0 M P L IY1 T
practice  v  P R AE1 K T AH0 S
train  v  T R EY1 N
exercise  v  EH1 K S ER0 S AY2 Z
relax  v  R IH0 L AE1 K S
rest  v  R EH1 S T
breathe  v  B R IY1 DH
wake  vi  W EY1 K
dream  v  D R IY1 M
marry  v  M AE1 R IY0
kiss  v  K IH1 S
hug  v  HH AH1 G
miss  v  M IH1 S
remind  v  R IY0 M AY1 N D
forgive  vi  F ER0 G IH1 V
blame  v  B L EY1 M
argue  v  AA1 R G Y UW0
discuss  v  D IH0 S K AH1 S
mention  v  M EH1 N SH AH0 N
repeat  v  R IH0 P IY1 T
translate  v  T R AE0 N Z L EY1 T
spell  v  S P EH1 L
pronounce  v  P R AH0 N AW1 N S
express  v  IH0 K S P R EH1 S
reply  v  R IH0 P L AY1
respond  v  R IH0 S P AA1 N D
greet  v  G R IY1 T
introduce  v  IH2 N T R AH0 D UW1 S
perform  v  P ER0 F AO1 R M
act  v  AE1 K T
pretend  v  P R IY0 T EH1 N D
behave  v  B IH0 HH EY1 V
treat  v  T R IY1 T
cure  v  K Y UH1 R
heal  v  HH IY1 L
hurt  vi  HH ER1 T
suffer  v  S AH1 F ER0
injure  v  IH1 N JH ER0
bleed  vi  B L IY1 D
recover  v  R IH0 K AH1 V ER0
examine  v  IH0 G Z AE1 M AH0 N
operate  v  AA1 P ER0 EY2 T
manage  v  M AE1 N AH0 JH
control  v  K AH0 N T R OW1 L
organize  v  AO1 R G AH0 N AY2 Z
arrange  v  ER0 EY1 N JH
collect  v  K AH0 L EH1 K T
gather  v  G AE1 DH ER0
divide  v  D IH0 V AY1 D
separate  v  S EH1 P ER0 EY2 T
connect  v  K AH0 N EH1 K T
attach  v  AH0 T AE1 CH
remove  v  R IY0 M UW1 V
replace  v  R IH0 P L EY1 S
repeat  v  R IH0 P IY1 T
dedetect  v  D IH0 T EH1 K T
prevent  v  P R IH0 V EH1 N T
avoid  v  AH0 V OY1 D
escape  v  IH0 S K EY1 P
chase  v  CH EY1 S
hunt  v  HH AH1 N T
attack  v  AH0 T AE1 K
defend  v  D IH0 F EH1 N D
guard  v  G AA1 R D
rescue  v  R EH1 S K Y UW0
warn  v  W AO1 R N
threaten  v  TH R EH1 T AH0 N
frighten  v  F R AY1 T AH0 N
scare  v  S K EH1 R
surprise  v  S ER0 P R AY1 Z
shock  v  SH AA1 K
amaze  v  AH0 M EY1 Z
bore  v  B AO1 R
annoy  v  AH0 N OY1
bother  v  B AA1 DH ER0
disturb  v  D IH0 S T ER1 B
interrupt  v  IH2 N T ER0 AH1 P T
delay  v  D IH0 L EY1
cancel  v  K AE1 N S AH0 L
postpone  v  P OW0 S T P OW1 N
prefer  v  P R IH0 F ER1
select  v  S AH0 L EH1 K T
compare  v  K AH0 M P EH1 R
judge  v  JH AH1 JH
blame  v  B L EY1 M
praise  v  P R EY1 Z
reward  v  R IH0 W AO1 R D
punish  v  P AH1 N IH0 SH
forbid  vi  F ER0 B IH1 D
permit  v  P ER0 M IH1 T
obey  v  OW0 B EY1
insist  v  IH0 N S IH1 S T
demand  v  D IH0 M AE1 N D
beg  v  B EH1 G
request  v  R IH0 K W EH1 S T
claim  v  K L EY1 M
declare  v  D IH0 K L EH1 R
announce  v  AH0 N AW1 N S
admit  v  AH0 D M IH1 T
deny  v  D IH0 N AY1
confirm  v  K AH0 N F ER1 M
prove  v  P R UW1 V
convince  v  K AH0 N V IH1 N S
persuade  v  P ER0 S W EY1 D
encourage  v  EH0 N K ER1 IH0 JH
inspire  v  IH0 N S P AY1 R
motivate  v  M OW1 T AH0 V EY2 T
educate  v  EH1 JH AH0 K EY2 T
inform  v  IH0 N F AO1 R M
instruct  v  IH0 N S T R AH1 K T
guide  v  G AY1 D
assist  v  AH0 S IH1 S T
advise  v  AE0 D V AY1 Z
recommend  v  R EH2 K AH0 M EH1 N D
employ  v  EH0 M P L OY1
hire  v  HH AY1 R
retire  v  R IH0 T AY1 R
resign  v  R IH0 Z AY1 N
earn  v  ER1 N
spend  vi  S P EH1 N D
cost  vi  K AO1 S T
owe  v  OW1
borrow  v  B AA1 R OW0
lend  vi  L EH1 N D
rent  v  R EH1 N T
invest  v  IH0 N V EH1 S T
trade  v  T R EY1 D
exchange  v  IH0 K S CH EY1 N JH
deposit  v  D AH0 P AA1 Z IH0 T
waste  v  W EY1 S T
donate  v  D OW1 N EY2 T
contribute  v  K AH0 N T R IH1 B Y UW0 T
supply  v  S AH0 P L AY1
provide  v  P R AH0 V AY1 D
obtain  v  AH0 B T EY1 N
gain  v  G EY1 N
achieve  v  AH0 CH IY1 V
succeed  v  S AH0 K S IY1 D
fail  v  F EY1 L
attempt  v  AH0 T EH1 M P T
struggle  v  S T R AH1 G AH0 L
compete  v  K AH0 M P IY1 T
defeat  v  D IH0 F IY1 T
score  v  S K AO1 R
celebrate  v  S EH1 L AH0 B R EY2 T
enjoy  v  EH0 N JH OY1
entertain  v  EH2 N T ER0 T EY1 N
amuse  v  AH0 M Y UW1 Z
tease  v  T IY1 Z
joke  v  JH OW1 K
trick  v  T R IH1 K
cheat  v  CH IY1 T
lie  v0  L AY1
steal  vi  S T IY1 L
rob  v  R AA1 B
murder  v  M ER1 D ER0
kill  v  K IH1 L
arrest  v  ER0 EH1 S T
accuse  v  AH0 K Y UW1 Z
charge  v  CH AA1 R JH
prison  v  P R IH1 Z AH0 N
release  v  R IY0 L IY1 S
free  v  F R IY1
escape  v  IH0 S K EY1 P
hide  vi  HH AY1 D
seek  v0  S IY1 K
appear  v  AH0 P IH1 R
disappear  v  D IH2 S AH0 P IH1 R
vanish  v  V AE1 N IH0 SH
emerge  v  IH0 M ER1 JH
exist  v  IH0 G Z IH1 S T
occur  v  AH0 K ER1
belong  v  B IH0 L AO1 NG
contain  v  K AH0 N T EY1 N
consist  v  K AH0 N S IH1 S T
depend  v  D IH0 P EH1 N D
rely  v  R IH0 L AY1
relate  v  R IY0 L EY1 T
refer  v  R AH0 F ER1
concern  v  K AH0 N S ER1 N
involve  v  IH0 N V AA1 L V
affect  v  AH0 F EH1 K T
influence  v  IH1 N F L UW0 AH0 N S
determine  v  D IH0 T ER1 M AH0 N
define  v  D IH0 F AY1 N
identify  v  AY0 D EH1 N T AH0 F AY2
classify  v  K L AE1 S AH0 F AY2
analyze  v  AE1 N AH0 L AY2 Z
estimate  v  EH1 S T AH0 M EY2 T
calculate  v  K AE1 L K Y AH0 L EY2 T
predict  v  P R IH0 D IH1 K T
forecast  v  F AO1 R K AE2 S T
observe  v  AH0 B Z ER1 V
witness  v  W IH1 T N AH0 S
experience  v  IH0 K S P IH1 R IY0 AH0 N S
explore  v  IH0 K S P L AO1 R
investigate  v  IH0 N V EH1 S T AH0 G EY2 T
research  v  R IY0 S ER1 CH
experiment  v  IH0 K S P EH1 R AH0 M AH0 N T
demonstrate  v  D EH1 M AH0 N S T R EY2 T
illustrate  v  IH1 L AH0 S T R EY2 T
present  v  P R IY0 Z EH1 N T
display  v  D IH0 S P L EY1
exhibit  v  IH0 G Z IH1 B IH0 T
reveal  v  R IH0 V IY1 L
expose  v  IH0 K S P OW1 Z
conceal  v  K AH0 N S IY1 L
protest  v  P R AH0 T EH1 S T
complain  v  K AH0 M P L EY1 N
criticize  v  K R IH1 T IH0 S AY2 Z
oppose  v  AH0 P OW1 Z
resist  v  R IH0 Z IH1 S T
reject  v  R IH0 JH EH1 K T
approve  v  AH0 P R UW1 V
vote  v  V OW1 T
elect  v  IH0 L EH1 K T
govern  v  G AH1 V ER0 N
rule  v  R UW1 L
command  v  K AH0 M AE1 N D
direct  v  D ER0 EH1 K T
lead  vi  L IY1 D
conduct  v  K AH0 N D AH1 K T
establish  v  IH0 S T AE1 B L IH0 SH
found  v  F AW1 N D
form  v  F AO1 R M
shape  v  SH EY1 P
construct  v  K AH0 N S T R AH1 K T
produce  v  P R AH0 D UW1 S
manufacture  v  M AE2 N Y AH0 F AE1 K CH ER0
assemble  v  AH0 S EH1 M B AH0 L
install  v  IH0 N S T AO1 L
maintain  v  M EY0 N T EY1 N
adjust  v  AH0 JH AH1 S T
operate  v  AA1 P ER0 EY2 T
function  v  F AH1 NG K SH AH0 N
process  v  P R AA1 S EH2 S
generate  v  JH EH1 N ER0 EY2 T
convert  v  K AH0 N V ER1 T
transform  v  T R AE0 N S F AO1 R M
transfer  v  T R AE0 N S F ER1
transport  v  T R AE0 N S P AO1 R T
ship  v  SH IH1 P
export  v  IH0 K S P AO1 R T
import  v  IH0 M P AO1 R T
load  v  L OW1 D
store  v  S T AO1 R
stock  v  S T AA1 K
wrap  v  R AE1 P
seal  v  S IY1 L
label  v  L EY1 B AH0 L
mark  v  M AA1 R K
sign  v  S AY1 N
stamp  v  S T AE1 M P
list  v  L IH1 S T
register  v  R EH1 JH IH0 S T ER0
schedule  v  S K EH1 JH UW0 L
book  v  B UH1 K
reserve  v  R IH0 Z ER1 V
confirm  v  K AH0 N F ER1 M
attend  v  AH0 T EH1 N D
host  v  HH OW1 S T
chair  v  CH EH1 R
interview  v  IH1 N T ER0 V Y UW2
consult  v  K AH0 N S AH1 L T
negotiate  v  N IH0 G OW1 SH IY0 EY2 T
cooperate  v  K OW0 AA1 P ER0 EY2 T
collaborate  v  K AH0 L AE1 B ER0 EY2 T
communicate  v  K AH0 M Y UW1 N AH0 K EY2 T
contact  v  K AA1 N T AE2 K T
dial  v  D AY1 AH0 L
text  v  T EH1 K S T
phone  v  F OW1 N
film  v  F IH1 L M
photograph  v  F OW1 T AH0 G R AE2 F
broadcast  v  B R AO1 D K AE2 S T
publish  v  P AH1 B L IH0 SH
edit  v  EH1 D IH0 T
revise  v  R IH0 V AY1 Z
correct  v  K ER0 EH1 K T
delete  v  D IH0 L IY1 T
insert  v  IH0 N S ER1 T
attach  v  AH0 T AE1 CH
submit  v  S AH0 B M IH1 T
apply  v  AH0 P L AY1
enroll  v  EH0 N R OW1 L
graduate  v  G R AE1 JH UW0 EY2 T
major  v  M EY1 JH ER0
review  v  R IY0 V Y UW1
memorize  v  M EH1 M ER0 AY2 Z
recall  v  R IH0 K AO1 L
remind  v  R IY0 M AY1 N D
concentrate  v  K AA1 N S AH0 N T R EY2 T
focus  v  F OW1 K AH0 S
ignore  v  IH0 G N AO1 R
neglect  v  N IH0 G L EH1 K T
attract  v  AH0 T R AE1 K T
appeal  v  AH0 P IY1 L
impress  v  IH0 M P R EH1 S
admire  v  AH0 D M AY1 R
respect  v  R IH0 S P EH1 K T
honor  v  AA1 N ER0
trust  v  T R AH1 S T
suspect  v  S AH0 S P EH1 K T
envy  v  EH1 N V IY0
pity  v  P IH1 T IY0
comfort  v  K AH1 M F ER0 T
console  v  K AH0 N S OW1 L
calm  v  K AA1 M
satisfy  v  S AE1 T AH0 S F AY2
please  v  P L IY1 Z
delight  v  D IH0 L AY1 T
disappoint  v  D IH2 S AH0 P OY1 NT
upset  vi  AH0 P S EH1 T
regret  v  R IH0 G R EH1 T
worry  v  W ER1 IY0
fear  v  F IH1 R
panic  v0  P AE1 N IH0 K
hesitate  v  HH EH1 Z AH0 T EY2 T
pause  v  P AO1 Z
wander  v  W AA1 N D ER0
march  v  M AA1 R CH
hurry  v  HH ER1 IY0
rush  v  R AH1 SH
race  v  R EY1 S
chase  v  CH EY1 S
crawl  v  K R AO1 L
roll  v  R OW1 L
slip  v  S L IH1 P
trip  v  T R IH1 P
stumble  v  S T AH1 M B AH0 L
bounce  v  B AW1 N S
swing  vi  S W IH1 NG
spin  vi  S P IH1 N
stretch  v  S T R EH1 CH
bend  vi  B EH1 N D
fold  v  F OW1 L D
twist  v  T W IH1 S T
shake  vi  SH EY1 K
wave  v  W EY1 V
nod  v  N AA1 D
bow  v  B AW1
kneel  v  N IY1 L
lean  v  L IY1 N
hang  vi  HH AE1 NG
swim  vi  S W IH1 M
dive  v  D AY1 V
float  v  F L OW1 T
sink  vi  S IH1 NG K
drown  v  D R AW1 N
splash  v  S P L AE1 SH
drip  v  D R IH1 P
flow  v  F L OW1
freeze  vi  F R IY1 Z
melt  v  M EH1 L T
evaporate  v  IH0 V AE1 P ER0 EY2 T
shine  vi  SH AY1 N
glow  v  G L OW1
flash  v  F L AE1 SH
sparkle  v  S P AA1 R K AH0 L
fade  v  F EY1 D
darken  v  D AA1 R K AH0 N
brighten  v  B R AY1 T AH0 N
bloom  v  B L UW1 M
blossom  v  B L AA1 S AH0 M
plant  v  P L AE1 N T
sow  v  S OW1
harvest  v  HH AA1 R V AH0 S T
water  v  W AO1 T ER0
feed  vi  F IY1 D
breed  vi  B R IY1 D
raise  v  R EY1 Z
tame  v  T EY1 M
milk  v  M IH1 L K
herd  v  HH ER1 D
fish  v  F IH1 SH
bark  v  B AA1 R K
bite  v0  B AY1 T
sting  vi  S T IH1 NG
scratch  v  S K R AE1 CH
dig  vi  D IH1 G
bury  v  B EH1 R IY0
drill  v  D R IH1 L
pump  v  P AH1 M P
mine  v  M AY1 N
carve  v  K AA1 R V
hammer  v  HH AE1 M ER0
nail  v  N EY1 L
screw  v  S K R UW1
glue  v  G L UW1
stick  vi  S T IH1 K
tape  v  T EY1 P
tie  v0  T AY1
knot  v  N AA1 T
sew  v  S OW1
knit  v  N IH1 T
weave  v0  W IY1 V
spin  vi  S P IH1 N
iron  v  AY1 ER0 N
polish  v  P AA1 L IH0 SH
sweep  vi  S W IY1 P
scrub  v  S K R AH1 B
mop  v  M AA1 P
dust  v  D AH1 S T
tidy  v  T AY1 D IY0
arrange  v  ER0 EY1 N JH
decorate  v  D EH1 K ER0 EY2 T
furnish  v  F ER1 N IH0 SH
lock  v  L AA1 K
unlock  v  AH0 N L AA1 K
knock  v  N AA1 K
ring  vi  R IH1 NG
slam  v  S L AE1 M
creak  v  K R IY1 K
squeeze  v  S K W IY1 Z
press  v  P R EH1 S
grab  v  G R AE1 B
grip  v  G R IH1 P
grasp  v  G R AE1 S P
snatch  v  S N AE1 CH
toss  v  T AO1 S
fling  v0  F L IH1 NG
hurl  v  HH ER1 L
kick  v  K IH1 K
punch  v  P AH1 N CH
slap  v  S L AE1 P
whip  v  W IH1 P
stab  v  S T AE1 B
shoot  vi  SH UW1 T
aim  v  EY1 M
target  v  T AA1 R G AH0 T
miss  v  M IH1 S
dodge  v  D AA1 JH
block  v  B L AA1 K
trap  v  T R AE1 P
capture  v  K AE1 P CH ER0
surround  v  S ER0 AW1 N D
invade  v  IH0 N V EY1 D
conquer  v  K AA1 NG K ER0
surrender  v  S ER0 EH1 N D ER0
retreat  v  R IY0 T R IY1 T
advance  v  AH0 D V AE1 N S
explode  v  IH0 K S P L OW1 D
collapse  v  K AH0 L AE1 P S
crash  v  K R AE1 SH
crack  v  K R AE1 K
shatter  v  SH AE1 T ER0
smash  v  S M AE1 SH
tear  vi  T EH1 R
rip  v  R IH1 P
snap  v  S N AE1 P
crush  v  K R AH1 SH
grind  v0  G R AY1 N D
chop  v  CH AA1 P
slice  v  S L AY1 S
peel  v  P IY1 L
squeeze  v  S K W IY1 Z
stir  v  S T ER1
blend  v  B L EH1 N D
season  v  S IY1 Z AH0 N
roast  v  R OW1 S T
grill  v  G R IH1 L
steam  v  S T IY1 M
chew  v  CH UW1
swallow  v  S W AA1 L OW0
sip  v  S IH1 P
lick  v  L IH1 K
starve  v  S T AA1 R V
feast  v  F IY1 S T
digest  v  D AY0 JH EH1 S T
sneeze  v  S N IY1 Z
cough  v  K AO1 F
yawn  v  Y AO1 N
snore  v  S N AO1 R
blink  v  B L IH1 NG K
stare  v  S T EH1 R
glance  v  G L AE1 N S
gaze  v  G EY1 Z
peek  v  P IY1 K
frown  v  F R AW1 N
blush  v  B L AH1 SH
sweat  v  S W EH1 T
tremble  v  T R EH1 M B AH0 L
shiver  v  SH IH1 V ER0
faint  v  F EY1 N T
sigh  v  S AY1
groan  v  G R OW1 N
moan  v  M OW1 N
scream  v  S K R IY1 M
yell  v  Y EH1 L
cheer  v  CH IH1 R
applaud  v  AH0 P L AO1 D
clap  v  K L AE1 P
whistle  v  W IH1 S AH0 L
hum  v  HH AH1 M
sing  vi  S IH1 NG
chant  v  CH AE1 N T
recite  v  R AH0 S AY1 T
quote  v  K W OW1 T
summarize  v  S AH1 M ER0 AY2 Z
conclude  v  K AH0 N K L UW1 D
infer  v  IH0 N F ER1
assume  v  AH0 S UW1 M
suppose  v  S AH0 P OW1 Z
argue  v  AA1 R G Y UW0
debate  v  D AH0 B EY1 T
question  v  K W EH1 S CH AH0 N
quiz  v  K W IH1 Z
reply  v  R IH0 P L AY1
justify  v  JH AH1 S T AH0 F AY2
verify  v  V EH1 R AH0 F AY2
certify  v  S ER1 T AH0 F AY2
qualify  v  K W AA1 L AH0 F AY2
simplify  v  S IH1 M P L AH0 F AY2
clarify  v  K L EH1 R AH0 F AY2
specify  v  S P EH1 S AH0 F AY2
modify  v  M AA1 D AH0 F AY2
notify  v  N OW1 T AH0 F AY2
unify  v  Y UW1 N AH0 F AY2
multiply  v  M AH1 L T AH0 P L AY2
occupy  v  AA1 K Y AH0 P AY2
vary  v  V EH1 R IY0
differ  v  D IH1 F ER0
match  v  M AE1 CH
fit  vi  F IH1 T
suit  v  S UW1 T
adapt  v  AH0 D AE1 P T
adopt  v  AH0 D AA1 P T
accompany  v  AH0 K AH1 M P AH0 N IY0
escort  v  EH0 S K AO1 R T
abandon  v  AH0 B AE1 N D AH0 N
quit  vi  K W IH1 T
withdraw  vi  W IH0 DH D R AO1
remain  v  R IH0 M EY1 N
settle  v  S EH1 T AH0 L
inhabit  v  IH0 N HH AE1 B AH0 T
dwell  v  D W EH1 L
reside  v  R IH0 Z AY1 D
migrate  v  M AY1 G R EY2 T
wander  v  W AA1 N D ER0
roam  v  R OW1 M
drift  v  D R IH1 F T
depart  v  D IH0 P AA1 R T
approach  v  AH0 P R OW1 CH
near  v  N IH1 R
gather  v  G AE1 DH ER0
assemble  v  AH0 S EH1 M B AH0 L
disperse  v  D IH0 S P ER1 S
scatter  v  S K AE1 T ER0
spread  vi  S P R EH1 D
expand  v  IH0 K S P AE1 N D
extend  v  IH0 K S T EH1 N D
shrink  v0  SH R IH1 NG K
contract  v  K AH0 N T R AE1 K T
swell  vi  S W EH1 L
inflate  v  IH0 N F L EY1 T
compress  v  K AH0 M P R EH1 S
absorb  v  AH0 B Z AO1 R B
release  v  R IY0 L IY1 S
emit  v  IH0 M IH1 T
radiate  v  R EY1 D IY0 EY2 T
reflect  v  R IH0 F L EH1 K T
echo  v0  EH1 K OW0
vibrate  v  V AY1 B R EY2 T
rotate  v  R OW1 T EY2 T
revolve  v  R IH0 V AA1 L V
orbit  v  AO1 R B AH0 T
launch  v  L AO1 N CH
lift  v  L IH1 F T
hover  v  HH AH1 V ER0
glide  v  G L AY1 D
soar  v  S AO1 R
flap  v  F L AE1 P
flutter  v  F L AH1 T ER0
perch  v  P ER1 CH
nest  v  N EH1 S T
hatch  v  HH AE1 CH
crawl  v  K R AO1 L
slither  v  S L IH1 DH ER0
hop  v  HH AA1 P
leap  v  L IY1 P
gallop  v  G AE1 L AH0 P
trot  v  T R AA1 T
graze  v  G R EY1 Z
roar  v  R AO1 R
growl  v  G R AW1 L
howl  v  HH AW1 L
purr  v  P ER1
meow  v  M IY0 AW1
chirp  v  CH ER1 P
buzz  v  B AH1 Z
hiss  v  HH IH1 S
croak  v  K R OW1 K
quack  v  K W AE1 K
moo  v  M UW1
neigh  v  N EY1
bleat  v  B L IY1 T
oink  v  OY1 NG K
"""
