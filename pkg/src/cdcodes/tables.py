"""Reference rows for the published lower-bound tables this library reproduces.

Each multi-block row is (q, n, t, new, old): the bound applies to
A_q((s+1)n, 2(n-t), n), `new` is the exact value the formula must produce
(decimal string), and `old` is the previously best known value, kept for
comparison output only.  TABLE2/4/5 use s = 1/2/3; TABLE3 rows are the
Johnson-halving bounds for A_q(17, 6, 8) derived from (n, t) = (9, 6).
TABLE1 rows are (q, k, h, d, new, old) for the three-block linkage bound on
A_q(3k+h, d, k); their `new` values depend on external best-known inputs,
so they are reference data, not a reproduction target.
"""

# (q, n, t, new, old) with ambient (s+1)n, d = 2(n-t), k = n
TABLE2 = [
    (2, 6, 3, '16865101', '16813481'),
    (3, 6, 3, '282454201121', '282444003514'),
    (4, 6, 3, '281476519727131', '281476052114497'),
    (5, 6, 3, '59604684750269569', '59604675306650126'),
    (7, 6, 3, '191581237048517640001', '191581236128477745586'),
    (8, 6, 3, '4722366523787007379831', '4722366518055302169089'),
    (9, 6, 3, '79766443311676870053761', '79766443282767710316742'),
    (2, 7, 4, '34532238023', '34432090228'),
    (3, 7, 4, '50035894106387201', '50031545103789355'),
    (4, 7, 4, '1180598085852241507903', '1180591620717679804753'),
    (5, 7, 4, '2910384996920980634798249', '2910383045673376465235151'),
    (7, 7, 4, '378818703472375564718065717033', '378818692265664782360946466387'),
    (8, 7, 4, '40564819558769908757687294403071', '40564819207303340852292565865025'),
    (9, 7, 4, '2503155512361524878607376336254513', '2503155504993241601338448821594903'),
    (2, 8, 4, '1099562828461', '1099528467457'),
    (3, 8, 4, '12157665957047665121', '12157665459056935444'),
    (4, 8, 4, '1208925820022362618115611', '1208925819614629174771969'),
    (5, 8, 4, '9094947017807612368002449569', '9094947017729282379150781876'),
    (8, 8, 4, '1329227995784921367439420337873299831', '1329227995784915872903807060297125889'),
    (9, 8, 4, '147808829414346014311987492968729104321', '147808829414345923316083210206426350884'),
    (2, 8, 5, '282927683836351', '282065502894292'),
    (3, 8, 5, '79773403858211367304001', '79766443077154959293127'),
    (4, 8, 5, '79228596795209597286010744831', '79228162514264619069883417872'),
    (5, 8, 5, '3552716061446350478564136876781249', '3552713678800500988960303012503775'),
    (7, 8, 5, '36703369303165506402681624627151289328001', '36703368217294125441421792268854792155015'),
    (8, 8, 5, '22300745391757287672361562599998342819479551', '22300745198530623141540440639170885812523072'),
    (9, 8, 5, '6362685459865446204861526038554759414900421761', '6362685441135942358474908528981840165075519087'),
    (2, 9, 5, '18015215398068295', '18014674602898481'),
    (3, 9, 5, '58149739380417667198523945', '58149737003040060077869735'),
    (4, 9, 5, '324518553767842986423212886251071', '324518553658426726783224741101633'),
    (5, 9, 5, '55511151231735878357960116829164048249', '5511151231257827021181587219248047001'),
    (7, 9, 5, '4318114567396591817623016095285299264536325745', '4318114567396436564035293097709356501432634891'),
    (8, 9, 5, '5846006549323635837934034302923933590182378512895', '5846006549323611672814739330865150093023313396225'),
    (9, 9, 5, '3381391913522728424620280247018514713413256655866641', '3381391913522726342930221472392241320293166235632813'),
    (2, 9, 6, '9271545156551861247', '9242714023345881465'),
    (3, 9, 6, '1144661280188113228748844786839', '1144561273430987589803690699062'),
    (4, 9, 6, '85071058146182803276503351119848669183', '85070591730234620588210416203639381057'),
    (5, 9, 6, '108420289965710977906690845017097020371093749', '108420217248550443415297195374965698255868876'),
    (7, 9, 6, '174251503388975551318884922599369466772818993479502027', '174251498233690814305513203525556311342652949519875530'),
    (8, 9, 6, '784637723721919791138381634635235733830468771226268467199', '784637716923335095479474002419511965161887731769327059457'),
    (9, 9, 6, '1310020512493866339206870302329188713348371417431388541027913', '1310020508637620352391208118240901618983186587598009041655712'),
]

TABLE3 = [
    (2, 9, 6, '18073187439672244', '18052309715589680'),
    (3, 9, 6, '58151863451946414791142287', '58149737004893178906982592'),
    (4, 9, 6, '324519094951964764830545503899935', '324518553658445173598894784069722'),
    (5, 9, 6, '55511160040730079834424837423236913732', '55511151231257850304257974463391093912'),
    (7, 9, 6, '4318114588142293281901457797760474522447137650', '4318114567396436565139720799403479106597531752'),
    (8, 9, 6, '5846006556420871874075455669759065390165175356426', '5846006549323611672893967493970879175905108820562'),
    (9, 9, 6, '3381391914748407703492580638492271571254198293516660', '3381391913522726342933655156221409046767887551853552'),
]

TABLE4 = [
    (2, 6, 3, '282957166112041', '282206169223861'),
    (3, 6, 3, '79773409708059646924801', '79770528994296955194991'),
    (4, 6, 3, '79228596837171602219181433561', '79228465213535437618551984193'),
    (5, 6, 3, '3552716061490558316664513479945761', '3552715498605378031730651855484501'),
    (7, 6, 3, '36703369303167232772339895338921195414401', '36703369126904824755396790969987924701979'),
    (8, 6, 3, '22300745391757404476560672559219358376203601', '22300745364690190225432828772081255730905601'),
    (9, 6, 3, '6362685459865451044936927568858327487086310721', '6362685457559470145240699283992755392451222033'),
    (2, 6, 4, '1321055665352277121', '1301902384896972957'),
    (3, 6, 4, '43241984454039791949376848001', '43225562953761729683056546744'),
    (4, 6, 4, '1336497734661564567903849870119608321', '1336458405032472190749500319115666769'),
    (5, 6, 4, '869154313455552863010495292746726010500001', '869150623985533847218379378322608115640776'),
    (7, 6, 4, '508273121397713151914173798947508628845999547723521', '508272997250425080540503340954642021097480629123655'),
    (8, 6, 4, '1532929073533720120343154848157539946320174365857546241', '1532928950959596238597654001568049806785911717931405888'),
    (9, 6, 4, '1797321852988389530407874000031880315113074804045244546241', '1797321798992219760448646358825022918933920879979928528654'),
    (2, 5, 3, '1252379805361', '1235787711790'),
    (3, 5, 3, '12399152568347096641', '12394544365887696067'),
    (4, 5, 3, '1215514411238392851780481', '1215478900794081741379237'),
    (5, 5, 3, '9113715532351043940956916001', '9113676963739967346201192181'),
    (7, 5, 3, '6369953433032789460601458266169601', '6369951878418978850938882154998943'),
    (8, 5, 3, '1329603936275508669606118276013276161', '1329603830010446369320349184800629897'),
    (9, 5, 3, '147834451659241278745558658029146634561', '147834447219250203363412960695716746417'),
]

TABLE5 = [
    (2, 5, 3, '1315398998655356311', None),
    (3, 5, 3, '43233485281590911580807321041', None),
    (4, 5, 3, '1336472440592799231370494712907901631', None),
    (5, 5, 3, '869151650599051646738433375279575594407249', None),
    (7, 5, 3, '508273020693237561132754855997185401884597574981601', None),
    (8, 5, 3, '1532928970776586688938815376036341347556330253989504511', None),
    (9, 5, 3, '1797321806605534646862867182733878159175088330825288747361', None),
    (2, 6, 3, '4747234173413401936981', None),
    (3, 6, 3, '22530367127371196208130075198509281', None),
    (4, 6, 3, '22300867449560834030210344616161360246897891', None),
    (5, 6, 3, '211758378832969565256609532806254712000815561347009', None),
    (7, 6, 3, '7031676686916460305530685695221278081277908734094305105188801', None),
    (8, 6, 3, '105312292581044862467221898491140379101347355113312142905458229671', None),
    (9, 6, 3, '507528787550401889216222390017824754036868775577998894410404563393281', None),
]

# (q, k, h, d, new, old) with ambient 3k+h
TABLE1 = [
    (2, 5, 0, 4, '1252409384941', '1235787711790'),
    (3, 5, 0, 4, '12399152701973746721', '12394544365887696067'),
    (4, 5, 0, 4, '1215514411297742359058971', '1215478900794081741379237'),
    (5, 5, 0, 4, '9113715532358125452199289569', '9113676963739967346201192181'),
    (7, 5, 0, 4, '6369953433032799634940814403550401', '6369951878418978850938882154998943'),
    (8, 5, 0, 4, '1329603936275508854413747923192211831', '1329603830010446369320349184800629897'),
    (9, 5, 0, 4, '147834451659241281142237889908886770241', '147834447219250203363412960695716746417'),
    (2, 5, 1, 4, '20021868703021', '19772603404689'),
    (3, 5, 1, 4, '1004246333824396831601', '1003958093636913086356'),
    (4, 5, 1, 4, '311169775104436392108967291', '311162598603284926601722789'),
    (5, 5, 1, 4, '5696067828980651367335863660369', '5696048102337479591400199274056'),
    (7, 5, 1, 4, '15294257681112128770405497391944583201', '15294254460083968221104260125199891012'),
    (8, 5, 1, 4, '5446057670176710830579259179780851932151', '5446057287722788328736150291737261978761'),
    (9, 5, 1, 4, '969941834171302637911606992269353378624481', '969941808205500584267352435307639908204424'),
    (2, 5, 2, 4, '320365633119931', '316361655057323'),
    (3, 5, 2, 4, '81343951054914823057601', '81320605584592333256896'),
    (4, 5, 2, 4, '79659462303038098228828589551', '79657625242440942039401907493'),
    (5, 5, 2, 4, '3560042392786324176231394246966849', '3560030063960924744701581895765556'),
    (7, 5, 2, 4, '36721512692312285771132498925095511388801', '36721504958661607698871396988494253570488'),
    (8, 5, 2, 4, '22307052217040048930179286541042123379285951', '22307050650512540994503272604052070322817161'),
    (9, 5, 2, 4, '6363788373997701968481732473171613640616521601', '6363788203636289333378099338862136580032063628'),
    (2, 5, 3, 4, '5125557140935621', '5061786480788587'),
    (3, 5, 3, 4, '6586984882892620375466801', '6586969052351977742082856'),
    (4, 5, 3, 4, '20392353563137486484409822692731', '20392352062064881161765714936261'),
    (5, 5, 3, 4, '2225018800862003413405883937426160369', '2225018789975577965438466389564044756'),
    (7, 5, 3, 4, '88168333413018579424197685118451711404973601', '88168333405746520084990224156399442519707072'),
    (8, 5, 3, 4, '91369679465994251166831903260963819527758453751', '91369679464499367913485404586035285169051407881'),
    (9, 5, 3, 4, '41752814404221893183457654349776548099387974166561', '41752814404057694316293709762272976069664226251756'),
    (2, 5, 4, 4, '82000714657355896', '80988583692738669'),
    (3, 5, 4, 4, '533545775512317389092508801', '533544493240510197079493944'),
    (4, 5, 4, 4, '5220442512163072842390763542302191', '5220442127888609577412002268988497'),
    (5, 5, 4, 4, '1390636750538751806795749107370809466849', '1390636743734736228399041491814662484526'),
    (7, 5, 4, 4, '211692168524657609159563235358302246119908739201', '211692168507197394724061528199514099366794683044'),
    (8, 5, 4, 4, '374250207092712452775584843883548745445452491759551', '374250207086589410973636217184400516522331058635329'),
    (9, 5, 4, 4, '273940215306099841176451031332562928972470621968108481', '273940215305022532409203029750272995891203951349923082'),
    (2, 6, 0, 4, '1321065731337118327', '1301902384896972957'),
    (3, 6, 0, 4, '43241984500836016475467263377', '43225562953761729683056546744'),
    (4, 6, 0, 4, '1336497734664697221079670997903343231', '1336458405032472190749500319115666769'),
    (5, 6, 0, 4, '869154313455571766784982919397200744721649', '869150623985533864501113464558715816063570'),
    (7, 6, 0, 4, '508273121397713162379788076978860454942323352347617', '508272997250425038178122079989337055565420133852250'),
    (8, 6, 0, 4, '1532929073533720122381792167972707130036770914661707007', '1532928950959596238597654001568049806785911717931336256'),
    (9, 6, 0, 4, '1797321852988389530622964571912268841144546741298887430561', '1797321798992219760708364878565965820546280222286535998208'),
    (2, 6, 1, 4, '42208289248791279191', '41660876316712223851'),
    (3, 6, 1, 4, '10503812381857770555608261193203', '10503811797764100313173626438410'),
    (4, 6, 1, 4, '1368533407936318281870034335245915778619', '1368533406753251523327488538756265820613'),
    (5, 6, 1, 4, '2716095700040832081994799751630916148882970869', '2716095699954793272557435557305913288978107256'),
    (7, 6, 1, 4, '8542544264789674046368728045599749570456742066054954023', '8542544264787894328644239651424668612867543534298440406'),
    (8, 6, 1, 4, '50231015865045467079871255733225534110744159933103898225143', '50231015865044049546367926323381856072893849422409772176905'),
    (9, 6, 1, 4, '106130054908692097595495275184534478863507421929255303118181289', '106130054908691584634732118842258778340200008478852505231237828'),
    (2, 6, 0, 6, '282952629488341', '282206169223861'),
    (3, 6, 0, 6, '79773409456539341408321', '7977052899429695519499'),
    (4, 6, 0, 6, '79228596836450068221001288411', '79228465213535437618551984193'),
    (5, 6, 0, 6, '3552716061490180809120486350237569', '3552715498605377972125976548834375'),
    (7, 6, 0, 6, '36703369303167227557598648188527350390401', '36703369126904823762048081643830813838569'),
    (8, 6, 0, 6, '22300745391757404242034414621765810585581431', '22300745364690190225432828772081255730905601'),
    (9, 6, 0, 6, '6362685459865451038148930813165508870317893121', '6362685457559470499618039892582186036406787787'),
    (2, 6, 1, 6, '4527245732135821', '4515298730748862'),
    (3, 6, 1, 6, '6461646166374500995275281', '6461417369472937542117973'),
    (4, 6, 1, 6, '20282520790132976684274968510491', '20282487415579548140041494597697'),
    (5, 6, 1, 6, '2220447538431364272651600126040019569', '2220447188517452217698097229003922001'),
    (7, 6, 1, 6, '88124789696904513393222987051228915467935201', '88124789274625593704300569118173789808207533'),
    (8, 6, 1, 6, '91343853124638327776833862508434972183748561271', '91343853013939625003475366792854319199699599873'),
    (9, 6, 1, 6, '41745579302177224261344043029615239593994446168481', '41745579287064298367037383503578317354686374220297'),
]
