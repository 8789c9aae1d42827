#pragma once
// Expected values for the end-to-end fixture suite, frozen from an
// independent symbolic + multiprecision oracle implementation.
// Polynomial coefficient lists are lowest-degree-first decimal strings.
#include <string>
#include <vector>

namespace frozen {

struct RatFuncExpect {
    std::vector<std::string> num;  // integer coefficients, lowest first
    std::vector<std::string> den;  // num/den is the exact expected value
};

struct KExpect {
    long sturm_count = -1;           // -1: not pinned
    std::vector<std::string> rk;     // empty: resultant not pinned
    // the first-side count alone does not close this k; the record must
    // still end clean via the partner count or box exclusion
    bool needs_second_chance = false;
};

struct FixtureExpect {
    std::string name;
    unsigned s_final = 0;
    std::string q;  // canonical involution curve polynomial in x, z
    std::vector<RatFuncExpect> family;
    std::vector<KExpect> ks;
};

inline const FixtureExpect& fx_ex4_1() {
    static const FixtureExpect f = [] {
        FixtureExpect e;
        e.name = "ex4_1";
        e.s_final = 2;
        e.q = "x^2+2*x+z^2+2*z";
        e.family.push_back({{
            "8","14","7"
        }, {
            "12","24","12"
        }});
        e.family.push_back({{
            "0","10","17","8"
        }, {
            "12","24","12"
        }});
        e.family.push_back({{
            "0","0","12","20","9"
        }, {
            "12","24","12"
        }});
        {
            KExpect k;
            k.sturm_count = 0;
            k.rk = {
                "0","0","0","640","960","-3520","-9920","-3728","16952","31678","27315","13720",
                "4116","686","49"
            };
            e.ks.push_back(std::move(k));
        }
        {
            KExpect k;
            k.sturm_count = 0;
            k.rk = {
                "0","0","0","0","0","0","0","46080","161280","162560","-155520","-838720",
                "-2042080","-3316112","-2349368","3076896","11075536","16308890","15563173",
                "10617552","5357176","2015596","560450","112112","15288","1274","49"
            };
            e.ks.push_back(std::move(k));
        }
        {
            KExpect k;
            k.sturm_count = 0;
            k.rk = {
                "0","0","0","0","0","0","0","0","0","0","0","0","0","0","0","0","2936012800",
                "23488102400","60922265600","-38902169600","-622141112320","-1542507724800",
                "-983640309760","3843138519040","12422596853760","17078128476160","6731918311424",
                "-22032452190208","-57506809937920","-78039850926080","-65844591943680",
                "-17982972272640","51976033194240","120526172098560","165040577464640",
                "173977473490240","151041116975360","110825444508000","69533347664520",
                "37506758600280","17428570111255","6974449443680","2398029844980","705395496740",
                "176361827035","37130280000","6497928720","928283760","105487125","9172800",
                "573300","22932","441"
            };
            e.ks.push_back(std::move(k));
        }
        return e;
    }();
    return f;
}

inline const FixtureExpect& fx_rlv3() {
    static const FixtureExpect f = [] {
        FixtureExpect e;
        e.name = "rlv3";
        e.s_final = 2;
        e.q = "x+z";
        e.family.push_back({{
            "8","12","-5","-11","3","5"
        }, {
            "2","-8","12","-8","2"
        }});
        e.family.push_back({{
            "8","8","-13","-13","7","7"
        }, {
            "1","-2","1"
        }});
        e.family.push_back({{
            "8","-2","-11","1","6"
        }, {
            "1","-2","1"
        }});
        {
            KExpect k;
            k.sturm_count = 0;
            k.rk = {
                "8","0","7","0","-8","0","5"
            };
            e.ks.push_back(std::move(k));
        }
        {
            KExpect k;
            k.sturm_count = 0;
            k.rk = {
                "288","0","-496","0","217","0","81","0","-77","0","35"
            };
            e.ks.push_back(std::move(k));
        }
        {
            KExpect k;
            k.sturm_count = 0;
            k.rk = {
                "512","0","-1632","0","2200","0","-1617","0","693","0","-175","0","35"
            };
            e.ks.push_back(std::move(k));
        }
        return e;
    }();
    return f;
}

inline const FixtureExpect& fx_ex4_2() {
    static const FixtureExpect f = [] {
        FixtureExpect e;
        e.name = "ex4_2";
        e.s_final = 2;
        e.q = "2*x^2+2*x*z+3*x+2*z^2+3*z";
        e.family.push_back({{
            "24","35","16"
        }, {
            "18","36","18"
        }});
        e.family.push_back({{
            "24","41","20"
        }, {
            "18","18"
        }});
        e.family.push_back({{
            "24","47","24"
        }, {
            "18"
        }});
        {
            KExpect k;
            k.sturm_count = 0;
            k.rk = {
                "0","0","0","0","0","0","0","0","0","0","0","0","0","0","0","0","0","0",
                "-4100625","0","7381125","0","-27829575","0","59446305","0","-22746501","0",
                "-73163817","0","484874667","0","-1493938917","0","2562211098","0","-3191367816",
                "0","1919389880","0","4744396912","0","-17848024288","0","34846768704","0",
                "-52008317568","0","61575840000","0","-55216201728","0","35827630080","0",
                "-16169828352","0","4807720960","0","-847249408","0","67108864"
            };
            e.ks.push_back(std::move(k));
        }
        {
            KExpect k;
            k.sturm_count = 0;
            k.rk = {
                "0","0","0","0","0","0","0","0","0","0","0","0","0","0","0","0","0","0","0","0",
                "0","0","0","0","0","0","0","0","0","0","0","0","0","0","0","0","0","0","0","0",
                "31381059609","0","-167365651248","0","1956086048961","0","-9430589543238","0",
                "46865481713352","0","-176357939078016","0","455880788770212","0",
                "-863939081125800","0","-116111671119954","0","7470430024521168","0",
                "-24137851470631938","0","33035374869771996","0","75238928691099804","0",
                "-629479395109443024","0","1848462645785452020","0","-2533801683324553128","0",
                "-797000411605615839","0","11958501542561719488","0","-30066643690640455095","0",
                "41915476684147274298","0","-15912340897281658380","0","-86918064714568937520",
                "0","274799261324488183200","0","-480536930634088698624","0",
                "545672954676430025920","0","-262066823592037674720","0","-509264787104153420352",
                "0","1677836981202715642240","0","-2843028993983616710400","0",
                "3396074186268651303936","0","-2785274918909198120960","0",
                "828225913521073434624","0","2096669123651795804160","0",
                "-5140266098472224841728","0","7355199746367981207552","0",
                "-8131622429334904406016","0","7436824343708397273088","0",
                "-5753091537250292858880","0","3783910943742596481024","0",
                "-2109959677225755213824","0","990446675345799118848","0",
                "-387494601001430679552","0","124705236537353175040","0","-32439639531419860992",
                "0","6654751040002326528","0","-1037470584667111424","0","115686215428079616","0",
                "-8233143068786688","0","281474976710656"
            };
            e.ks.push_back(std::move(k));
        }
        {
            KExpect k;
            k.sturm_count = 0;
            k.rk = {
                "0","0","0","0","0","0","0","0","0","0","0","0","0","0","0","0","0","0","0","0",
                "0","0","0","0","0","0","0","0","0","0","0","0","0","0","0","0","0","0","0","0",
                "0","0","0","0","0","0","0","0","0","0","0","0","0","0","0","0","0","0","0","0",
                "0","0","0","0","0","0","-564859072962","0","9602604240354","0",
                "-334396571193504","0","4363389893686608","0","-73467495734427072","0",
                "782391919169336211","0","-8123474587741067403","0","71465856522473201436","0",
                "-538091549815375504476","0","3622387244569557705504","0",
                "-21090806465558679803736","0","103410190328084219952576","0",
                "-428772983912565327217872","0","1523451268954471562906292","0",
                "-4681408389235328801265156","0","12483785784131333920843920","0",
                "-28782550280312080806305340","0","56374543459712446392666996","0",
                "-88981976081418498970574760","0","93394338823048235204636064","0",
                "19869828003994505989847184","0","-431384047063526782201907790","0",
                "1435244638348289454480180846","0","-3424400529800479326902815128","0",
                "6834339518648661385033960944","0","-12100385901168531532833268320","0",
                "19727803073266290536199221496","0","-30414924963205886121628296960","0",
                "44501838937600058546035759312","0","-58652769650434656282531465036","0",
                "56149736584383959310985279836","0","12159510968387500118391724816","0",
                "-251375892291541537041594263538","0","827611416382236399129905857722","0",
                "-1916613511037552463542169418168","0","3581387063928229807739052208272","0",
                "-5647765105202719692342885627600","0","7736757590464195491817457161939","0",
                "-9590009385241949362313975158971","0","11629977949759428401234910021852","0",
                "-15435659689533611904543896637604","0","23701083620996768312987710729392","0",
                "-39422739353266202839142252733984","0","64487608135506624753793906039744","0",
                "-98271834794815096958226451558656","0","137012620868541257207367031034112","0",
                "-174424864703679448811987126465024","0","203433625602688765701973911681024","0",
                "-218335997933458200035890687789056","0","216507108089118780436224549249024","0",
                "-199004999564517250511591040946176","0","169945692074342236848079934889984","0",
                "-135031792020892430928540929212416","0","99884466386956669989027047571456","0",
                "-68769554782492316766248699756544","0","44023298146902352239158708142080","0",
                "-26155212160969353535092941389824","0","14383315963455457372772574953472","0",
                "-7295082047779057238484834058240","0","3397037612387730671720749596672","0",
                "-1444325105707985637499012644864","0","557035878173522764255228592128","0",
                "-193410704601690257618802573312","0","59942940613392521718336061440","0",
                "-16422616742952673684863582208","0","3933385460057172993707606016","0",
                "-812914509310376037851332608","0","142686852764963280768729088","0",
                "-20844891890641586532384768","0","2466308059747256138465280","0",
                "-227189606867647640633344","0","15302141662695121747968","0",
                "-671216488463298723840","0","14411518807585587200"
            };
            e.ks.push_back(std::move(k));
        }
        return e;
    }();
    return f;
}

inline const FixtureExpect& fx_r11() {
    static const FixtureExpect f = [] {
        FixtureExpect e;
        e.name = "r11";
        e.s_final = 2;
        e.q = "3*x^2*z+x^2+3*x*z^2+10*x*z+3*x+z^2+3*z";
        e.family.push_back({{
            "24","13","5"
        }, {
            "36","180","360","360","180","36"
        }});
        e.family.push_back({{
            "24","19","7"
        }, {
            "36","144","216","144","36"
        }});
        e.family.push_back({{
            "24","25","9"
        }, {
            "36","108","108","36"
        }});
        {
            KExpect k;
            k.sturm_count = 0;
            k.rk = {
                "0","0","0","0","0","0","0","0","0","0","0","0","0","0","0","0","0","0","0","0",
                "0","0","0","0","0","0","0","0","-67108864","0","847249408","0","-4807720960","0",
                "16169828352","0","-35827630080","0","55216201728","0","-61575840000","0",
                "52008317568","0","-34846768704","0","17848024288","0","-4744396912","0",
                "-1919389880","0","3191367816","0","-2562211098","0","1493938917","0",
                "-484874667","0","73163817","0","22746501","0","-59446305","0","27829575","0",
                "-7381125","0","4100625"
            };
            e.ks.push_back(std::move(k));
        }
        {
            KExpect k;
            k.sturm_count = 0;
            k.rk = {
                "0","0","0","0","0","0","0","0","0","0","0","0","0","0","0","0","0","0","0","0",
                "0","0","0","0","0","0","0","0","0","0","0","0","0","0","0","0","0","0","0","0",
                "0","0","0","0","0","0","0","0","0","0","0","0","0","0","0","0","0","0","0","0",
                "0","0","0","0","0","0","0","0","0","0","0","0","0","0","0","0","0","0","0","0",
                "0","0","0","0","0","0","0","0","0","0","0","0","4053239664633446400","0",
                "-117400398036247511040","0","1618902783193570607104","0",
                "-14170344019461572395008","0","88637531266374634045440","0",
                "-423365293638356238860288","0","1613160248610216254373888","0",
                "-5064575803205144260116480","0","13441810182157444807917568","0",
                "-30796486597752564970684416","0","61926022725995015602962432","0",
                "-110624837927308172323192832","0","176946984952851458507145216","0",
                "-254443404669466089513811968","0","329130483600485870583611392","0",
                "-381739646139280066905931776","0","393357222460833174897033216","0",
                "-352845591534751880802271232","0","263114857869327974993031168","0",
                "-142683917814173712205867008","0","20420244594509729458554880","0",
                "74731190025471362395284480","0","-124120657335519666437702400","0",
                "125402964488633346480427648","0","-91891726547332814014342656","0",
                "45315897968442795240772992","0","-5529984798726963556237952","0",
                "-16870006330718785582339200","0","21665506623876896814211104","0",
                "-15421900525752029574640248","0","6388414344513004950427896","0",
                "-181170484760165244418386","0","-1932610777715293651972827","0",
                "1589443587014113409192676","0","-703818738094977113858559","0",
                "137904714005649010840872","0","61667032701433061699748","0",
                "-74076482724335397191664","0","37206694307941822386900","0",
                "-10220959885147373945484","0","269411604841174601286","0",
                "1442945432207410952904","0","-941243589468314694882","0","329871513694471460712",
                "0","-59041258384419433836","0","-3463256779315885944","0","8941791617560679724",
                "0","-4522832443381913010","0","1221411248522027325","0","-263710734424231500",
                "0","47091202575755625"
            };
            e.ks.push_back(std::move(k));
        }
        {
            KExpect k;
            k.sturm_count = 0;
            k.rk = {
                "0","0","0","0","0","0","0","0","0","0","0","0","0","0","0","0","0","0","0","0",
                "0","0","0","0","0","0","0","0","0","0","0","0","0","0","0","0","0","0","0","0",
                "0","0","0","0","0","0","0","0","0","0","0","0","0","0","0","0","0","0","0","0",
                "0","0","0","0","0","0","0","0","0","0","0","0","0","0","0","0","0","0","0","0",
                "0","0","0","0","0","0","0","0","0","0","0","0","0","0","0","0","0","0","0","0",
                "0","0","0","0","0","0","0","0","0","0","0","0","0","0","0","0","0","0","0","0",
                "0","0","0","0","0","0","0","0","0","0","0","0","0","0","0","0","0","0","0","0",
                "0","0","0","0","0","0","0","0","0","0","0","0","0","0","0","0","0","0","0","0",
                "0","0","0","0","0","0","0","0","0","0","0","0","0","0","0","0","0","0","0","0",
                "0","0","0","0","0","0","0","0","-236949460644467318242410496","0",
                "11343955428353872860855402496","0","-264788377744961821134574059520","0",
                "4032923851513920033057799143424","0","-45289437243676521065383714619392","0",
                "401962088164536183841202466979840","0","-2952042604609382968551399235780608","0",
                "18543534687969739823413380494917632","0","-102168180040051004044735948794101760",
                "0","503544754764415852001833251858546688","0",
                "-2255082029756115743755432580406575104","0",
                "9292458479127460166906798085725224960","0",
                "-35583916703308581567804213299702136832","0",
                "127601410388478326433495083223686840320","0",
                "-430912353827888137189292924118671294464","0",
                "1375791718757398176900120294262761848832","0",
                "-4162983407392200887215872977122281652224","0",
                "11952738928143683668474169001504267042816","0",
                "-32570766681776534082648662739990859481088","0",
                "84185603833038734508584035856324291985408","0",
                "-206160158613054267926548967732029434101760","0",
                "477593368171600811532094884081913017925632","0",
                "-1044668219994428599119966239603133197058048","0",
                "2152734730649244541368296403920334398423040","0",
                "-4168080252811744878204940507659275033640960","0",
                "7558143098223415587699476783815694770765824","0",
                "-12784475903235271399844300631046266965458944","0",
                "20066429761926917412670087156389072754180096","0",
                "-29018964335435623232719043305712919513137152","0",
                "38272148122864866060881803032811031033282560","0",
                "-45321015293033872383627784306188797621567488","0",
                "46934446839951672380148204713947096494899200","0",
                "-40309836573163503359376224688503570084921344","0",
                "24706931686318058663295913779704247723098112","0",
                "-2717348960658019287425400334272605677289472","0",
                "-19878958264848386749337254179099051747409920","0",
                "36120993417031465205311254872245029868421120","0",
                "-40969552452323339163854614674232404695687168","0",
                "33778715998912374638582930591307029488074752","0",
                "-18590533429651342765614556297238462382368768","0",
                "2030297125236058094151340609924942372947968","0",
                "9921238552710370344160566420286050338490880","0",
                "-14418615626616743375241560817648874735228416","0",
                "12295241531479086680638744618868352111894144","0",
                "-6742561497741248990739588914565458211982656","0",
                "1221497224181843747223403422725168044269792","0",
                "2133674741672348006677261788861902972716608","0",
                "-2961489534471055712363530060448508929762376","0",
                "2126583797212653232289803072740217702302696","0",
                "-811875621595459929753228511398352419709440","0",
                "-159521299177249911717477919137091797851904","0",
                "532442079993095222656777982567503864338240","0",
                "-459592544225405181962165398611874663641840","0",
                "221049205430068958900592691314519715297008","0",
                "-22059996720193702492412150933861002137936","0",
                "-66593536851556106095668599702486077103772","0",
                "68511695544135925856901078815002322514195","0",
                "-35921660700306655245541049637586951719447","0",
                "6604166971478383499205530969728484026944","0",
                "6736434553666850202034854519822326045568","0",
                "-7686294992513655249686492154517966558440","0",
                "4004164797151406852508057534443050705320","0",
                "-780345838315727232139654300765155540960","0",
                "-575702179937138876919034596959188985472","0",
                "641492697317696771545264196832066974772","0",
                "-304902828873650706145981190887580656020","0",
                "49428831665534762727388168801871883264","0",
                "38266003907646279099361503102060762240","0",
                "-34601602521891321780642579866911963416","0",
                "13225298037186559389815179960451344728","0",
                "-1376536083135632806495220615763634752","0",
                "-1430569782106964997367696360926559560","0",
                "993274303494150306223361671189233474","0",
                "-324047435701621777203763483486238106","0","33154683696993911680405956093076800",
                "0","25481636831152049901033108953442816","0",
                "-16800940252934294117048713358948952","0","5252483857383627843248497800766584",
                "0","-725603840182187392941712160379360","0","-181194139289925895368704460100632",
                "0","152564747707509734782236193536780","0","-51878706271200927266765222092212",
                "0","9703641315688816927262751206784","0","-190807940268921268154010534336","0",
                "-608036096072063993386949165304","0","271689418081070435335763765304","0",
                "-71638959100141357923668045040","0","13177033429837378336170005700","0",
                "-1871844324446423368033264125","0","164196870565475734038005625"
            };
            e.ks.push_back(std::move(k));
        }
        return e;
    }();
    return f;
}

inline const FixtureExpect& fx_r7_r14() {
    static const FixtureExpect f = [] {
        FixtureExpect e;
        e.name = "r7_r14";
        e.s_final = 2;
        e.q = "3*x^3+3*x^2*z+8*x^2+3*x*z^2+8*x*z+6*x+3*z^3+8*z^2+6*z";
        e.family.push_back({{
            "24","52","47","15"
        }, {
            "36","180","360","360","180","36"
        }});
        e.family.push_back({{
            "24","58","55","18"
        }, {
            "36","144","216","144","36"
        }});
        e.family.push_back({{
            "24","64","63","21"
        }, {
            "36","108","108","36"
        }});
        {
            KExpect k;
            k.sturm_count = 0;
            k.rk = {
                "0","-13824","46080","480528","-7445184","-87755166","-391453648","-805736281",
                "193046980","6464971449","21578465768","39451689238","28862198008","-79405973808",
                "-371483316744","-838638735799","-1174047420004","-670027446749","1471548941520",
                "5407369263620","10096683826384","13649778117946","14520607867104",
                "12547336061769","8924863844988","5245856253567","2541411406152","1006357532022",
                "320935311864","80515720116","15314686200","2077311015","179115300","7381125"
            };
            e.ks.push_back(std::move(k));
        }
        {
            KExpect k;
            k.sturm_count = 0;
            k.rk = {
                "0","0","0","0","-4031078400","-117170012160","-1535060035584","-11562737817600",
                "-50645951042688","-84981046351104","414222493997952","3303058981007808",
                "9151056275296212","-1547047789085448","-102266146431997488",
                "-345431123251119952","-238038510764133191","2180198676093242678",
                "9055633009610589715","12880309233852576230","-22056355111090875806",
                "-151931503935738944086","-335794293968729527676","-180429716149779873142",
                "1151863584630372120972","4108860380388342811134","6488292118163542636722",
                "1356542462939019580398","-20034075852792710635782","-55676479020469128886722",
                "-75079737004776239790228","-16780485100952367839274","172648635751887489103605",
                "457395688249098793188072","642868390235638237851561","410010591914349087004008",
                "-493331777362399351100532","-1976028336680139496127388",
                "-3439459660996392375285528","-3918041642995646734507548",
                "-2534907678020699167789152","963531945740570427562524",
                "5939685038725223315188268","11067358533884736542657980",
                "14906690702052677573409800","16517639896797259054578484",
                "15778501656536556033471464","13289431188418850319951004",
                "9992166394686302034724883","6755972050890870389625382",
                "4125219212950876631393909","2279995404745677625484502",
                "1141614893570392269201978","517694970860206246658898","212338255645856161526868",
                "78595320500008593195762","26167746056817141842580","7802933976212388357510",
                "2072310335989119392130","486732328471030242870","100202096649175620426",
                "17875028952474541110","2722356432229997340","347027871724671870",
                "36023537129303295","2925300350396700","174321881787375","6779858557500",
                "129140163000"
            };
            e.ks.push_back(std::move(k));
        }
        {
            KExpect k;
            k.sturm_count = 0;
            k.rk = {
                "0","0","0","0","0","0","0","0","0","2340476367667200","75285323159961600",
                "756671133674373120","-3760726729268920320","-172202998657716043776",
                "-1814997932410437402624","-5793500446079571062784","74498391977497151348736",
                "1193532673416779481179904","8557918739733464135525376",
                "33279073167908282310533952","15979373463989185444334592",
                "-688190789959806044894585256","-4785119817633618064497207360",
                "-15948146623441554618767934252","-9676147362822949987669179344",
                "192504204368806495691575972898","1120410643178180000703481389728",
                "3007134421793823271693711711031","861286765200559737896985176780",
                "-28849393735343574922340635198276","-133292332590347993027791225814240",
                "-285178023762501352882994363138517","12918717670729774385970992420460",
                "2357661200576965136049518595348444","8741408469613251698138910825618108",
                "15086476972222275000658204258218174","-4588391820970172079389392377555696",
                "-108106177086653544454937221139840232","-326799262029100230331863125602809912",
                "-449636807815922974819293036939762786","275146955534434268288160749944787112",
                "2905666306664533772165506750515889266","6850551564337644684475908979514977608",
                "6013830461049212232974133181029177063","-12262550674185001868245114386574381956",
                "-53458064080301903904913056950593596948",
                "-77889870469963886507142078824651120064",
                "36408837345205257828421402148762016243",
                "434024321338277582527451005113417167724",
                "990960111878300903962139349387340638648",
                "813285380599177724463900922534665760236",
                "-1970585100981466739705859869701241045560",
                "-9032482754667354711587853098557644796136",
                "-18341618482471005500812796964406363881320",
                "-19400957969272640672830533675602085772136",
                "7854811355928787008216321052932640651852",
                "82710754526518372222488919729743107680384",
                "197752852153074017055103473572015547237956",
                "287471764218003731943618501910373357369376",
                "221424247856404633816742935727873459136078",
                "-139839138564037610243728322628705303733416",
                "-813544680652898544911383897314202922349768",
                "-1540449789050123975081761205022957765845184",
                "-1731664262676766284701430478290319880597226",
                "-653940619883184622168449866176189232931240",
                "2110570003263995084153393065752539463709896",
                "6096201455842164298026447515876757901145784",
                "9633406610521630503294932109121306905773844",
                "10147888145218092925638649173076702553799168",
                "5197606040904633859429736852912719123702992",
                "-6077015333669865000966522231773646705080112",
                "-21795906432541067235007515550390994125402380",
                "-37220496708826929843267999215458225059228624",
                "-46005787454250955687893667287883593991185036",
                "-42466560331642723808195049518542181902149072",
                "-23916330706301239397469020186919744889768602",
                "7987716786554032470774591193109425840409496",
                "47531169759469532092187485909041768268967160",
                "86742984004095488038050595592414207371757440",
                "117922901761878425467724939087940334856008766",
                "135860352697649550500179260997863020451831224",
                "138961612599387040457000177820400980045177344",
                "129061516623941632094359115005304323125147512",
                "110247227144534192320360080555425902508415560",
                "87316270816052790274874103591242554592851792",
                "64461546796975463257648923483459321401385576",
                "44523411361746887350236759865733961370336752",
                "28846148165606152036664407335900559702086948",
                "17562849886694416969400152391473381314833040",
                "10061419639039176187339724960258032819573722",
                "5427986634988680027249580445334459861039360",
                "2758905981518342411196011692241332530970779",
                "1321376803310342495212865537951610310622940",
                "596302957211728746251556804297084363250956",
                "253462031110763093899375800711926341629600",
                "101419662194410588940553242682357399155103",
                "38173119124311258561456583092542929181628",
                "13501673120519156898774795044370333741948",
                "4482113827005056279904250618582717358988",
                "1394479057337615367626805366503606206686",
                "405913270341734552025497005940379875760",
                "110327595972798573822377993429610759384",
                "27936202409724571146730105908818136552","6572528753064993903972109631320844190",
                "1432361640600648709338044271432883176","288133987231279797810323328999326682",
                "53281792288404606930570458285268168","9014253360358845644067549817215891",
                "1387415181423425310044908445358828","192979345124298183461461215263772",
                "24063553043125779181499470622016","2663805649415253832214772759279",
                "258613976489700342933617878620","21680572911307508665237879080",
                "1537802941511764352132876700","89742691050997950660764160",
                "4137369855991995653213400","141296243795613575361000","3177929623880907315000",
                "35310329154232303500"
            };
            e.ks.push_back(std::move(k));
        }
        return e;
    }();
    return f;
}

inline const FixtureExpect& fx_r15() {
    static const FixtureExpect f = [] {
        FixtureExpect e;
        e.name = "r15";
        e.s_final = 2;
        e.q = "3*x^3+3*x^2*z+8*x^2+3*x*z^2+8*x*z+6*x+3*z^3+8*z^2+6*z";
        e.family.push_back({{
            "24","40","31","9"
        }, {
            "36","252","756","1260","1260","756","252","36"
        }});
        e.family.push_back({{
            "24","46","39","12"
        }, {
            "36","216","540","720","540","216","36"
        }});
        e.family.push_back({{
            "24","52","47","15"
        }, {
            "36","180","360","360","180","36"
        }});
        {
            KExpect k;
            k.sturm_count = 0;
            k.rk = {
                "0","-13824","-700416","-14970096","-179376000","-1438755030","-8584373272",
                "-40317058131","-151616087952","-448234789966","-973431463500","-1209425206158",
                "857987096424","8987140018914","25450084481148","42590897676526","34727289904608",
                "-34823189383158","-180769317570476","-352793948669766","-427422181446216",
                "-269425003496898","163856173101708","759616981097256","1295092734404336",
                "1567635576624246","1509548814395004","1204574759575766","810892158803928",
                "463975524537174","225975063900564","93401600985810","32531591812032",
                "9438549482574","2242243663740","425237082606","61951848840","6513340896",
                "440033148","14348907"
            };
            e.ks.push_back(std::move(k));
        }
        {
            KExpect k;
            k.sturm_count = 0;
            k.rk = {
                "0","0","0","0","25530163200","1010815303680","18388548937728","198036884219904",
                "1313577789844608","4296960444651264","-11359657788134400","-234898432424398656",
                "-1491943509612173364","-5021330122205699496","-1939751980876146404",
                "86666272746059999416","605489853758048875575","2533689645809380714102",
                "7583279379753164677028","16411787570315477673592","22200717884330828477453",
                "-4129725851720653449758","-155666199697417184215810","-756149169106712009840088",
                "-2926135179894795728241605","-9756767349387285747141422",
                "-26538222195873221728223504","-52430855924999747031363112",
                "-45735982638937536551771771","155851861721631271149210626",
                "931975449397370339340639010","2825342180654864104723324472",
                "5960306677899216944358129347","8500299882065181452513556426",
                "4231464370707762837558806788","-19223840178171079185545265720",
                "-78242558441885789906468529627","-183365909691674657920313892438",
                "-321530938078412857670155816962","-438018947952451219983669435288",
                "-434139206213854614986772137553","-197130336505139328675670205510",
                "335728698515584507459802998744","1103399941504457809557328822296",
                "1884644202017974950774368679769","2342103024580903259091282768026",
                "2151713762133355259383044439594","1166295160630227759796408258280",
                "-474028355929418165315843683571","-2356873521613107460635350561650",
                "-3945732105031620636596183225244","-4792826951924211804583623018248",
                "-4710625968551495149359138125069","-3821036930517749191766613105242",
                "-2471060001395588623374717021718","-1072176983041667491888786241480",
                "51853138279363075049076885665","746154568109081186057285982262",
                "1020772039918719742127732350208","989686751377557710618172044744",
                "796476245369915509902051045855","560017310841254773055055346054",
                "352016166358518741450961515126","200200162704689229533547954984",
                "103708236546008256626604632241","49116274935327582583448800206",
                "21306019165849213389361339740","8469793774266859642224341592",
                "3084052398028815284733921543","1027200339492368248308129102",
                "312267674374166519647247898","86384882388233491345597752",
                "21662505705911814769059765","4900409661451636224196542",
                "994016131912701387505080","179452830568008254389128","28566720109603321813431",
                "3962930922665233427718","471886764699714475554","47271841448216691456",
                "3875137008199714440","249662814803904996","11856266417233944","369041261001840",
                "5648590729620"
            };
            e.ks.push_back(std::move(k));
        }
        {
            KExpect k;
            k.sturm_count = 0;
            k.rk = {
                "0","0","0","0","0","0","0","0","0","-575088478912512","-36399980080005120",
                "-1183117351617036288","-26573878241269383168","-462158186105104809984",
                "-6524124359693405847552","-75973387155453120098304","-731321649701811403259904",
                "-5786297176791008032222464","-37062149760116942442209280",
                "-185173409411691933090525120","-647121342049321799439297792",
                "-831587639518522042224366024","7743084898631848846514608896",
                "71311186307868138141410210172","336586935522955340811922841840",
                "951071425945895013306597108742","637536964788841530498885085712",
                "-9327788108465230567694867903015","-57462452972578889512861096733332",
                "-183620918008561139220612828931727","-282146098209647069475326497426152",
                "442493891699133748120544493635382","4153090548486969110667701464083120",
                "12279249945608055783539224005727984","13157494553414498253508681816720688",
                "-39891934782804130438335868719154007","-190552018947029283365109776392336348",
                "-143245050730048295260605541352957123","1617207392570315956040848267057097864",
                "8114061342912248250877998309508287780","17378679988981773947228181361197297984",
                "-4817544950464750992686635138898011296",
                "-178580684919421542944784397432980870736",
                "-713648914872306721482443765313825079238",
                "-1559342317822467231995665626776473621672",
                "-1122445747280213166837458212203494136806",
                "6123716652443405094665908309454725229264",
                "30493370679368868631416573506837761487884",
                "76784091265309919654262695055964228720992",
                "105273865668150503881152870150701526466296",
                "-44618375003914691988556272176394823730208",
                "-712494234860511470452742361302271612476018",
                "-2245662164511524673895753991456860030123816",
                "-4192716325622960503424578782261920125228802",
                "-3518520270555658079400849300856501768338640",
                "7556487221211875179325320392241341604315300",
                "40993833543299508187735450425173563612948304",
                "102882536426467673880807734916029839482072162",
                "165510628623318093401275281708147198925459920",
                "120947619647910142468927595975468609759675523",
                "-258255572315031915087234397529399278325538940",
                "-1279376379758576171467630694660188591207429157",
                "-3094204466283389823478651138163598076123338616",
                "-5165275723275008340452819012637428752356624758",
                "-5484757871173838657773304751322913717277813808",
                "57663100241728570264587094084951282393262632",
                "17298997993129552872562499442936245440870224720",
                "51261950648933430576428942311681699552608477507",
                "100615775579572488470424497276667882025732126380",
                "149657623193613471453806530226337297514258602655",
                "160652768876677126890762949671374379668082504728",
                "71769740661061389916448955791687065202388168172",
                "-193363783288134292564454862289306480420343583520",
                "-701036772608193076634909490395001176431839020300",
                "-1470814580967647825968204125597460694552822741008",
                "-2438541242302000148332518062040762843201960603120",
                "-3437121894931742033909326686110574882265001411712",
                "-4212606001974300514407500370537163205459713631472",
                "-4482663094755423163053728661538742727382251250720",
                "-4026505291964281652211351911981360588602799837912",
                "-2777125749170779444431622887263967424991100462784",
                "-878117274972232887020138480101683432853286844944",
                "1324939889878135517428626531960025993729930280000",
                "3365294444406799952738167074851604680368760704372",
                "4785298427656535260384784748874332553512853869840",
                "5271217126356155431825182046662466120350306705708",
                "4743831154897864248111298717568472712308227114016",
                "3372998378350284078791088479490297742579529455396",
                "1514284415169681400322584511091763790282821375376",
                "-404995633411315765319473303732787091183967907318",
                "-2007087955892676958830172210214624664936823278544",
                "-3052085201689732885079392208429487049056136891793",
                "-3470764664493702794433949488060709399981246593484",
                "-3342844452892677283127293278445213129543560232521",
                "-2839784179162995906552533104476863622745511196504",
                "-2158382463441060597051799305848101923360103499094",
                "-1467359054553212327713041731663109853368275284144",
                "-878407751547382822596486694123869496344432987008",
                "-441822126937890446889246287685514798446882807088",
                "-159139819437655094690340799005249138244148913569",
                "-2828174022047747773441452006950847290142154948",
                "65193467857676539426091097310847803889376121003",
                "80673255622598649745711586197638004060270809144",
                "70674149920199427867671212218894830983835677788",
                "52347847955666426672056027807124915498473423488",
                "34638499438433115006859930089776607203123738424",
                "20982153827109406704555691553350907454840134928",
                "11786655613004495367386133199520775727951355394",
                "6186996409582374308087261853899199510002040120",
                "3049140731607710277901116465623225141300996898",
                "1415174124940993698685141668716280953614025808",
                "619774871228416297726175263169707695957473676",
                "256439495710220547195336141373902252824577888",
                "100314575168849649832990964642145617940265752",
                "37110171177592076459552174634359418984435168",
                "12982186427768558056551562646737768460976222",
                "4293199750284863753368032975815640657503640",
                "1341327163597266601037104928125579125020862",
                "395592270119591748327715770411324863204016",
                "110016939338835882936690180390107389855164",
                "28814351892506129879020386636814960751664",
                "7096275050200933487030078208672771750222",
                "1640394006870194530956599890748256342000",
                "355193499032923832961083412284343947157",
                "71870282443441845031925308792284061020","13552429070096557902822507802800981597",
                "2374152550664340538236521178186354360","384997834422404596343284604011007190",
                "57551399773367054730088083591690288","7892148720897948798314511056267112",
                "987202396113074178807051839594160","111882510309904964376209938203669",
                "11396000695554231972312131096436","1032997986782052634616275486809",
                "82317076548600607605996233256","5677551393837551892204065172",
                "332070248662145649489038688","16015102248388601361931956",
                "611497996495643503325520","17332328105556270496596","324204412241518101360",
                "3001892705939982420"
            };
            e.ks.push_back(std::move(k));
        }
        return e;
    }();
    return f;
}

inline const FixtureExpect& fx_r17() {
    static const FixtureExpect f = [] {
        FixtureExpect e;
        e.name = "r17";
        e.s_final = 2;
        e.q = "2*x^2+2*x*z+3*x+2*z^2+3*z";
        e.family.push_back({{
            "12","13","5"
        }, {
            "18","90","180","180","90","18"
        }});
        e.family.push_back({{
            "12","16","7"
        }, {
            "18","72","108","72","18"
        }});
        e.family.push_back({{
            "12","19","9"
        }, {
            "18","54","54","18"
        }});
        {
            KExpect k;
            k.sturm_count = 0;
            k.rk = {
                "0","144","2124","11796","40863","107530","207928","231756","-14762","-505736",
                "-811260","-545376","83667","514542","508816","280480","94560","18400","1600"
            };
            e.ks.push_back(std::move(k));
        }
        {
            KExpect k;
            k.sturm_count = 1;
            k.rk = {
                "0","0","0","0","-1749600","-24447744","-138765960","-328674672","393008868",
                "5366778192","18101053683","31312384494","17659447343","-45413187592",
                "-117820859328","-110740083408","-70150894236","-327109470480","-1155507104070",
                "-1977380818380","-1188226000206","2411180849760","7597320999612",
                "10752449932872","8837418408048","2507257998720","-4181914487349",
                "-7308897386994","-6121238986089","-2793480275736","63161436372","1303748520648",
                "1268012478384","770451404544","341945499456","115180563456","29465235072",
                "5590287360","745866240","62720000","2508800"
            };
            k.needs_second_chance = true;
            e.ks.push_back(std::move(k));
        }
        {
            KExpect k;
            k.sturm_count = 0;
            k.rk = {
                "0","0","0","0","0","0","0","0","0","151165440","3854718720","45391202496",
                "322292906208","1494369331776","4424629499064","6256314984600","-10473869866104",
                "-82319926751028","-209595863268117","-193858647301008","470981395441725",
                "2130240094991002","3577848059388823","984420608802588","-9673051951101183",
                "-25188234459966330","-28832500059041961","2238361836123864","71675502316165065",
                "140392758019607610","138178435399523995","18974959515697780",
                "-182038962601402515","-350832553160856210","-370283625863061975",
                "-209720307747512880","50741659974805911","280518858361799838",
                "387286134437083221","362287876993214244","260278381347990675",
                "147837942536496066","65360167703275437","20656437238282968","2979952386344307",
                "-1332121616334450","-1231045727575743","-524383954925772","-134427234532937",
                "-11386608349058","7894709127720","4817222379984","1592459907024","372481421760",
                "64859672640","8363147520","763929600","44531200","1254400"
            };
            e.ks.push_back(std::move(k));
        }
        return e;
    }();
    return f;
}

inline const FixtureExpect& fx_ex4_3() {
    static const FixtureExpect f = [] {
        FixtureExpect e;
        e.name = "ex4_3";
        e.s_final = 2;
        e.q = "x^2+x*z+2*x+z^2+2*z";
        e.family.push_back({{
            "128","232","144","30"
        }, {
            "48","72","27"
        }});
        e.family.push_back({{
            "256","624","576","236","36"
        }, {
            "48","72","27"
        }});
        e.family.push_back({{
            "512","1568","1920","1168","352","42"
        }, {
            "48","72","27"
        }});
        {
            KExpect k;
            k.sturm_count = 0;
            k.rk = {
                "0","0","0","0","68719476736","0","-1663226085376","0","19228673441792","0",
                "-141267686129664","0","740120469700608","0","-2941382903726080","0",
                "9208254218633216","0","-23276628460961792","0","48313594441826304","0",
                "-83292204854673408","0","120181050372685824","0","-145808957264855040","0",
                "149073411038699520","0","-128436071903723520","0","93055836660295680","0",
                "-56459817320859648","0","28497855207955968","0","-11853931500573696","0",
                "4010437705211712","0","-1083610897303104","0","227834796704112","0",
                "-35858662610400","0","3968429379300","0","-275020717500","0","8968066875"
            };
            e.ks.push_back(std::move(k));
        }
        {
            KExpect k;
            k.sturm_count = -1;
            k.needs_second_chance = true;
            e.ks.push_back(std::move(k));
        }
        {
            KExpect k;
            k.sturm_count = -1;
            k.needs_second_chance = true;
            e.ks.push_back(std::move(k));
        }
        return e;
    }();
    return f;
}

inline const FixtureExpect& fx_rlv3_pair() {
    static const FixtureExpect f = [] {
        FixtureExpect e;
        e.name = "rlv3_pair";
        e.s_final = 2;
        e.q = "x+z";
        e.family.push_back({{
            "8","8","-13","-13","7","7"
        }, {
            "1","-2","1"
        }});
        e.family.push_back({{
            "8","-2","-11","1","6"
        }, {
            "1","-2","1"
        }});
        {
            KExpect k;
            k.sturm_count = 0;
            k.rk = {
                "8","0","-13","0","7"
            };
            e.ks.push_back(std::move(k));
        }
        {
            KExpect k;
            k.sturm_count = 0;
            k.rk = {
                "96","0","-240","0","243","0","-126","0","35"
            };
            e.ks.push_back(std::move(k));
        }
        return e;
    }();
    return f;
}

inline std::vector<const FixtureExpect*> fixtures() {
    return {&fx_ex4_1(), &fx_rlv3(), &fx_ex4_2(), &fx_ex4_3(), &fx_r11(),
            &fx_r7_r14(), &fx_r15(), &fx_r17()};
}

// Published resultant values for the first fixture (r_1, r_2, r_3), as
// expanded integer coefficient lists; the computed resultants must be
// positive rational multiples of these.
inline const std::vector<std::vector<std::string>>& published_rk_ex4_1() {
    static const std::vector<std::vector<std::string>> v = {
        {
            "0","0","0","1280","1920","-7040","-19840","-7456","33904","63356","54630","27440",
            "8232","1372","98"
        },
        {
            "0","0","0","0","0","0","0","46080","161280","162560","-155520","-838720","-2042080",
            "-3316112","-2349368","3076896","11075536","16308890","15563173","10617552","5357176",
            "2015596","560450","112112","15288","1274","49"
        },
        {
            "0","0","0","0","0","0","0","0","0","0","0","0","0","0","0","0","2936012800",
            "23488102400","60922265600","-38902169600","-622141112320","-1542507724800",
            "-983640309760","3843138519040","12422596853760","17078128476160","6731918311424",
            "-22032452190208","-57506809937920","-78039850926080","-65844591943680",
            "-17982972272640","51976033194240","120526172098560","165040577464640",
            "173977473490240","151041116975360","110825444508000","69533347664520",
            "37506758600280","17428570111255","6974449443680","2398029844980","705395496740",
            "176361827035","37130280000","6497928720","928283760","105487125","9172800","573300",
            "22932","441"
        },
    };
    return v;
}

// Published Wronskian numerators for the rlv3 fixture: the k=2 value of
// the two-member subfamily (second, third integrand) and the k=3 value
// of the full family; computed values must be rational multiples.
inline const std::vector<std::string>& published_w2_rlv3_pair() {
    static const std::vector<std::string> v = {
        "96","0","-240","0","243","0","-126","0","35"
    };
    return v;
}
inline const std::vector<std::string>& published_w3_rlv3() {
    static const std::vector<std::string> v = {
        "512","0","-1632","0","2200","0","-1617","0","693","0","-175","0","35"
    };
    return v;
}

// Numeric references for the ex4_1 fixture at h = 0.1 (preprocessed
// family, transformed-frame derivative formulas), computed with
// multiprecision quadrature in an independent implementation.
struct OracleRefEx41 {
    double h = 0.1;
    double x_plus = 0.27767583213962213;
    double x_minus = -0.39374554189983548;
    // derivative_Iik(i, k, 0.1), k rows, i columns
    double d0[3] = {0.04640485768080564, -0.001976028299221978, 0.00138035916691824};
    double d1[3] = {0.9518615532606698, -0.06328496562899654, 0.04494233940410749};
    double d2[3] = {10.33632024899395, -1.450554373454499, 1.063059131642637};
    double w2 = -0.00105582445716379;   // det of the 2x2 derivative matrix
    double w3 = -1.811123532757624e-5;  // det of the 3x3 derivative matrix
};

}  // namespace frozen
