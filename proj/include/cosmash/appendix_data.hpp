#ifndef COSMASH_APPENDIX_DATA_HPP
#define COSMASH_APPENDIX_DATA_HPP

// Embedded reference data: the 96 polynomials of the inconsistency
// system and the two certificate integers, transcribed mechanically.
// Do not edit by hand.

#include <array>

namespace cosmash {

inline const char* appendix_m() {
    return
        "7439679544472695271468183762968675788124066202221592474521090766657739744118014716346496422190049141"
        "5624948921978905681863659912718475954729372154203903495273446853538276064959494310131192923769051184"
        "0685351610068162108250400296296529970834273160776396985013607599144513992254475707853154410849970751"
        "2102737575934799907714953879556676995728024746290198687873296251621643633815209638250527358997899479"
        "1621563274606732737945746221690145231014799621394065415995932666458922058579217942226350466610839335"
        "4567318886645822657655844986324326155496741525084445926222559359211955969691380328723107519005521732"
        "7413460740371896853659603351588977968115695175041812679014335276002718660998214915527410333163444860"
        "3177626071958991988431774390356744728517793552810949326985652930143291491349664287716617712953696517"
        "3403869096969534997652670805680055942433454413700583056033168181616849912182107918069666616805284797"
        "9621760578351350595970195558949926034608680188903397988858087230355050401076728688770165264758138369"
        "3253438897969930850140789169375700626730459389966931296382767714360170478838805480996110427502094998"
        "6678185776694752286164935968438288565633982374051442448126787953233977723005064197591372176242656671"
        "8879510534296904175270695909292363378600959893140585559626813600016906531685040145416283772305759476"
        "1011657683167811555169305845478478806338306621372765239069477161257910301103888314021610653760031920"
        "1946481423913806605831966821843867694931670892825290436293171988515063062844262127634569518878771872"
        "6098802764135209889670283819212894634813091077402271469597141592313896734144657064844975796615963219"
        "9432273509871727991402051661857055760183956912876231129472828158271237822875437178838933046838032875"
        "2031075224655571556539747152453704197261473700092884776281844255702962553665863268738249933265075712"
        "0834370207270257913755152525173872004861875793714873555861477072643363579473048516167206141359195978"
        "2054391246466720392229385803742447108575961668225764282550823260539590024775392568545963916466517954"
        "7267184605318900851384620950094884939483191865449955078544526653649930064923714371125699377714599923"
        "6812438898248734108310387654123012166024364168864860363556427503922371434238234164323922008027138194"
        "3138781673436155038"
        ;
}

inline const char* appendix_m_prime() {
    return
        "7428397005139793590482994799473822991071794960172184348716053634383335699595663425638399773120886437"
        "4705498889373801919323683058035068669770418942938706179060310572416525044621610129121109870937623073"
        "5924859262016628173855406613911879074744641561171079355282338173412879675253790342238192386393400270"
        "8027352915251230948980775395031384510619043444866666718716267662697610741468443817995671248464790245"
        "3543526808611093381310757388860786483342326545421661952588011927799585954503667007082716507545568756"
        "8866871395544565740411464520423207036587611398164012060384502798748322037005855583137142465733350495"
        "7909973220938669262509761290001589207290526207393363685787447111027471414841552880777569958699586837"
        "0970347323571961884269052184366310801816992162010952578618480357854379639313046563388608397847791958"
        "5756624340900521088853836736152465133190339304276798709673539506508004842183239052177431077654174239"
        "3340209520158800604688022670011721059870153337295458251223307951387752026072707528579906659235423218"
        "8733069529825464133671211618199931521433773945109774980404407991963807632733557129653837015247482621"
        "7092566696969386749267533232992758578455161805055475622775278399542859314452433776825056913365194716"
        "4504921730992985575868649872900310965614955590888183977254997435147775520924238434931869472558884081"
        "6842580352424949729835590784811759257247130748696623706251388786947313364601739640402472273445816367"
        "7562429482676808186923876755406242340095904091305673052377871685776998380347016787947937216838349386"
        "0167516614189518340778342204426692448972980751305950747032423993139779429883747722873413308512372404"
        "1424847772264746314160423036790175046572471212188037568006529076071740936281738643905234022677518629"
        "2960287608535212456229658172598999937503624729206343437423468263621205097544810494533672867412331182"
        "1432009356527035167294045075319139773770305728032403462073885326604748989165102738088579467183633131"
        "3094761258307536919768816295760901219106675105861031054468508293016549522548720731688706999822975216"
        "0192082481143424149584998788881376773544039278684005413389648004523874085957975788016819512928"
        ;
}

inline const std::array<const char*, 96>& appendix_equation_texts() {
    static const std::array<const char*, 96> eqs = {
        // f_1
        "a1*a4 + a3*b1 + a2*c1 + a1*d1",
        // f_2
        "a2*a4 + a3*b2 + a2*c2 + a1*d2",
        // f_3
        "a3*a4 + a3*b3 + a2*c3 + a1*d3",
        // f_4
        "a4*a4 + a3*b4 + a2*c4 + a1*d4 - 1",
        // f_5
        "b1*b3 + a1*b4 + b2*c1 + b1*d1",
        // f_6
        "b2*b3 + a2*b4 + b2*c2 + b1*d2",
        // f_7
        "b3*b3 + a3*b4 + b2*c3 + b1*d3 - 1",
        // f_8
        "a4*b4 + b3*b4 + b2*c4 + b1*d4",
        // f_9
        "a1*a3 + a4*b1 + a1*c1 + a2*d1 - b2",
        // f_10
        "a2*a3 + a4*b2 + a1*c2 + a2*d2 - b1",
        // f_11
        "a3*a3 + a4*b3 + a1*c3 + a2*d3 - b4",
        // f_12
        "a3*a4 + a4*b4 + a1*c4 + a2*d4 - b3",
        // f_13
        "a1*b3 + b1*b4 + b1*c1 + b2*d1 - a2",
        // f_14
        "a2*b3 + b2*b4 + b1*c2 + b2*d2 - a1",
        // f_15
        "a3*b3 + b3*b4 + b1*c3 + b2*d3 - a4",
        // f_16
        "a4*b3 + b4*b4 + b1*c4 + b2*d4 - a3",
        // f_17
        "c1*c2 + b1*c3 + a1*c4 + c1*d1",
        // f_18
        "c2*c2 + b2*c3 + a2*c4 + c1*d2 - 1",
        // f_19
        "b3*c3 + c2*c3 + a3*c4 + c1*d3",
        // f_20
        "b4*c3 + a4*c4 + c2*c4 + c1*d4",
        // f_21
        "d1*d1 + c1*d2 + b1*d3 + a1*d4 - 1",
        // f_22
        "c2*d2 + d1*d2 + b2*d3 + a2*d4",
        // f_23
        "c3*d2 + b3*d3 + d1*d3 + a3*d4",
        // f_24
        "c4*d2 + b4*d3 + a4*d4 + d1*d4",
        // f_25
        "c1*d1 + d1*d2 + a1*d3 + b1*d4 - c2",
        // f_26
        "c2*d1 + d2*d2 + a2*d3 + b2*d4 - c1",
        // f_27
        "c3*d1 + a3*d3 + d2*d3 + b3*d4 - c4",
        // f_28
        "c4*d1 + a4*d3 + b4*d4 + d2*d4 - c3",
        // f_29
        "c1*c1 + a1*c3 + b1*c4 + c2*d1 - d2",
        // f_30
        "c1*c2 + a2*c3 + b2*c4 + c2*d2 - d1",
        // f_31
        "a3*c3 + c1*c3 + b3*c4 + c2*d3 - d4",
        // f_32
        "a4*c3 + b4*c4 + c1*c4 + c2*d4 - d3",
        // f_33
        "b3*c1*c1 + b1*b1*c3 + a1*b3*c3 + b1*c1*d1 + b1*c4*d1 + c2*d1*d1 + c1*c2*d3 + a1*c4*d3 - c3*c3 - c1*d3",
        // f_34
        "b3*c1*c2 + b1*b2*c3 + a2*b3*c3 + b2*c4*d1 + b1*c1*d2 + c2*d1*d2 + c2*c2*d3 + a2*c4*d3 - c3*c4 - c2*d3",
        // f_35
        "a3*b3*c3 + b1*b3*c3 + b3*c1*c3 + b3*c4*d1 + b1*c1*d3 + c2*c3*d3 + a3*c4*d3 + c2*d1*d3 - c1*c3 - c1*d1",
        // f_36
        "a4*b3*c3 + b1*b4*c3 + b3*c1*c4 + b4*c4*d1 + a4*c4*d3 + c2*c4*d3 + b1*c1*d4 + c2*d1*d4 - c1*c4 - c2*d1",
        // f_37
        "b4*c1*c1 + b1*b2*c3 + a1*b4*c3 + b2*c1*d1 + b1*c4*d2 + c2*d1*d2 + c1*c2*d4 + a1*c4*d4 - c3*c4 - c1*d4",
        // f_38
        "b4*c1*c2 + b2*b2*c3 + a2*b4*c3 + b2*c1*d2 + b2*c4*d2 + c2*d2*d2 + c2*c2*d4 + a2*c4*d4 - c4*c4 - c2*d4",
        // f_39
        "b2*b3*c3 + a3*b4*c3 + b4*c1*c3 + b3*c4*d2 + b2*c1*d3 + c2*d2*d3 + c2*c3*d4 + a3*c4*d4 - c2*c3 - c1*d2",
        // f_40
        "a4*b4*c3 + b2*b4*c3 + b4*c1*c4 + b4*c4*d2 + b2*c1*d4 + a4*c4*d4 + c2*c4*d4 + c2*d2*d4 - c2*c4 - c2*d2",
        // f_41
        "a3*c1*c1 + a1*a3*c3 + a1*b1*c3 + c1*c2*c3 + b1*c1*c4 + a1*c3*c4 + a1*c1*d1 + c1*c2*d1 - c3*d3 - d1*d3",
        // f_42
        "a3*c1*c2 + a2*a3*c3 + a1*b2*c3 + c2*c2*c3 + b2*c1*c4 + a2*c3*c4 + a1*c1*d2 + c1*c2*d2 - d2*d3 - c3*d4",
        // f_43
        "a3*a3*c3 + a1*b3*c3 + a3*c1*c3 + c2*c3*c3 + b3*c1*c4 + a3*c3*c4 + a1*c1*d3 + c1*c2*d3 - d1*d1 - c1*d3",
        // f_44
        "a3*a4*c3 + a1*b4*c3 + a3*c1*c4 + b4*c1*c4 + a4*c3*c4 + c2*c3*c4 + a1*c1*d4 + c1*c2*d4 - d1*d2 - c1*d4",
        // f_45
        "a4*c1*c1 + a1*a4*c3 + a2*b1*c3 + b1*c2*c4 + c1*c2*c4 + a1*c4*c4 + a2*c1*d1 + c2*c2*d1 - c4*d3 - d1*d4",
        // f_46
        "a4*c1*c2 + a2*a4*c3 + a2*b2*c3 + b2*c2*c4 + c2*c2*c4 + a2*c4*c4 + a2*c1*d2 + c2*c2*d2 - c4*d4 - d2*d4",
        // f_47
        "a3*a4*c3 + a2*b3*c3 + a4*c1*c3 + b3*c2*c4 + c2*c3*c4 + a3*c4*c4 + a2*c1*d3 + c2*c2*d3 - d1*d2 - c2*d3",
        // f_48
        "a4*a4*c3 + a2*b4*c3 + a4*c1*c4 + b4*c2*c4 + a4*c4*c4 + c2*c4*c4 + a2*c1*d4 + c2*c2*d4 - d2*d2 - c2*d4",
        // f_49
        "a3*c1*d1 + a1*d1*d1 + c1*c3*d2 + c1*d1*d2 + a1*a3*d3 + a1*b1*d3 + b1*c1*d4 + a1*c3*d4 - b3*c3 - b1*d3",
        // f_50
        "a3*c2*d1 + c2*c3*d2 + a1*d1*d2 + c1*d2*d2 + a2*a3*d3 + a1*b2*d3 + b2*c1*d4 + a2*c3*d4 - b4*c3 - b2*d3",
        // f_51
        "a3*c3*d1 + c3*c3*d2 + a3*a3*d3 + a1*b3*d3 + a1*d1*d3 + c1*d2*d3 + b3*c1*d4 + a3*c3*d4 - b3*c1 - b1*d1",
        // f_52
        "a3*c4*d1 + c3*c4*d2 + a3*a4*d3 + a1*b4*d3 + b4*c1*d4 + a4*c3*d4 + a1*d1*d4 + c1*d2*d4 - b4*c1 - b2*d1",
        // f_53
        "a4*c1*d1 + a2*d1*d1 + c1*c4*d2 + c2*d1*d2 + a1*a4*d3 + a2*b1*d3 + b1*c2*d4 + a1*c4*d4 - b3*c4 - b1*d4",
        // f_54
        "a4*c2*d1 + c2*c4*d2 + a2*d1*d2 + c2*d2*d2 + a2*a4*d3 + a2*b2*d3 + b2*c2*d4 + a2*c4*d4 - b4*c4 - b2*d4",
        // f_55
        "a4*c3*d1 + c3*c4*d2 + a3*a4*d3 + a2*b3*d3 + a2*d1*d3 + c2*d2*d3 + b3*c2*d4 + a3*c4*d4 - b3*c2 - b1*d2",
        // f_56
        "a4*c4*d1 + c4*c4*d2 + a4*a4*d3 + a2*b4*d3 + b4*c2*d4 + a4*c4*d4 + a2*d1*d4 + c2*d2*d4 - b4*c2 - b2*d2",
        // f_57
        "b3*c1*d1 + b1*d1*d1 + d1*d1*d2 + b1*b1*d3 + a1*b3*d3 + c1*d2*d3 + b1*d1*d4 + a1*d3*d4 - a3*c3 - a1*d3",
        // f_58
        "b3*c2*d1 + b1*d1*d2 + d1*d2*d2 + b1*b2*d3 + a2*b3*d3 + c2*d2*d3 + b2*d1*d4 + a2*d3*d4 - a4*c3 - a2*d3",
        // f_59
        "b3*c3*d1 + a3*b3*d3 + b1*b3*d3 + b1*d1*d3 + c3*d2*d3 + d1*d2*d3 + b3*d1*d4 + a3*d3*d4 - a3*c1 - a1*d1",
        // f_60
        "b3*c4*d1 + a4*b3*d3 + b1*b4*d3 + c4*d2*d3 + b1*d1*d4 + b4*d1*d4 + d1*d2*d4 + a4*d3*d4 - a4*c1 - a2*d1",
        // f_61
        "b4*c1*d1 + b2*d1*d1 + d1*d2*d2 + b1*b2*d3 + a1*b4*d3 + b1*d2*d4 + c1*d2*d4 + a1*d4*d4 - a3*c4 - a1*d4",
        // f_62
        "b4*c2*d1 + b2*d1*d2 + d2*d2*d2 + b2*b2*d3 + a2*b4*d3 + b2*d2*d4 + c2*d2*d4 + a2*d4*d4 - a4*c4 - a2*d4",
        // f_63
        "b4*c3*d1 + b2*b3*d3 + a3*b4*d3 + b2*d1*d3 + d2*d2*d3 + b3*d2*d4 + c3*d2*d4 + a3*d4*d4 - a3*c2 - a1*d2",
        // f_64
        "b4*c4*d1 + a4*b4*d3 + b2*b4*d3 + b2*d1*d4 + b4*d2*d4 + c4*d2*d4 + d2*d2*d4 + a4*d4*d4 - a4*c2 - a2*d2",
        // f_65
        "a1*a3*a3 + a1*a3*b1 + a1*a3*c1 + a4*b1*c1 + a1*a4*c3 + a2*c1*c3 + a1*a1*d1 + a2*c1*d1 - b3*d1 - a3*d3",
        // f_66
        "a2*a3*a3 + a1*a3*b2 + a4*b2*c1 + a1*a3*c2 + a2*a4*c3 + a2*c2*c3 + a1*a1*d2 + a2*c1*d2 - b3*d2 - a3*d4",
        // f_67
        "a3*a3*a3 + a1*a3*b3 + a4*b3*c1 + a1*a3*c3 + a3*a4*c3 + a2*c3*c3 + a1*a1*d3 + a2*c1*d3 - b1*d1 - a1*d3",
        // f_68
        "a3*a3*a4 + a1*a3*b4 + a4*b4*c1 + a4*a4*c3 + a1*a3*c4 + a2*c3*c4 + a1*a1*d4 + a2*c1*d4 - b1*d2 - a1*d4",
        // f_69
        "a1*a3*a4 + a2*a3*b1 + a1*a4*c1 + a4*b1*c2 + a1*a4*c4 + a2*c1*c4 + a1*a2*d1 + a2*c2*d1 - b4*d1 - a4*d3",
        // f_70
        "a2*a3*a4 + a2*a3*b2 + a1*a4*c2 + a4*b2*c2 + a2*a4*c4 + a2*c2*c4 + a1*a2*d2 + a2*c2*d2 - b4*d2 - a4*d4",
        // f_71
        "a3*a3*a4 + a2*a3*b3 + a4*b3*c2 + a1*a4*c3 + a3*a4*c4 + a2*c3*c4 + a1*a2*d3 + a2*c2*d3 - b2*d1 - a2*d3",
        // f_72
        "a3*a4*a4 + a2*a3*b4 + a4*b4*c2 + a1*a4*c4 + a4*a4*c4 + a2*c4*c4 + a1*a2*d4 + a2*c2*d4 - b2*d2 - a2*d4",
        // f_73
        "a3*b1*b1 + a1*a3*b3 + a1*b3*c1 + a1*b1*d1 + a4*b1*d1 + a2*d1*d1 + a1*a4*d3 + a2*c1*d3 - b3*c1 - a3*c3",
        // f_74
        "a3*b1*b2 + a2*a3*b3 + a1*b3*c2 + a4*b2*d1 + a1*b1*d2 + a2*d1*d2 + a2*a4*d3 + a2*c2*d3 - b3*c2 - a3*c4",
        // f_75
        "a3*a3*b3 + a3*b1*b3 + a1*b3*c3 + a4*b3*d1 + a3*a4*d3 + a1*b1*d3 + a2*c3*d3 + a2*d1*d3 - b1*c1 - a1*c3",
        // f_76
        "a3*a4*b3 + a3*b1*b4 + a1*b3*c4 + a4*b4*d1 + a4*a4*d3 + a2*c4*d3 + a1*b1*d4 + a2*d1*d4 - b1*c2 - a1*c4",
        // f_77
        "a3*b1*b2 + a1*a3*b4 + a1*b4*c1 + a1*b2*d1 + a4*b1*d2 + a2*d1*d2 + a1*a4*d4 + a2*c1*d4 - b4*c1 - a4*c3",
        // f_78
        "a3*b2*b2 + a2*a3*b4 + a1*b4*c2 + a1*b2*d2 + a4*b2*d2 + a2*d2*d2 + a2*a4*d4 + a2*c2*d4 - b4*c2 - a4*c4",
        // f_79
        "a3*b2*b3 + a3*a3*b4 + a1*b4*c3 + a4*b3*d2 + a1*b2*d3 + a2*d2*d3 + a3*a4*d4 + a2*c3*d4 - b2*c1 - a2*c3",
        // f_80
        "a3*a4*b4 + a3*b2*b4 + a1*b4*c4 + a4*b4*d2 + a4*a4*d4 + a1*b2*d4 + a2*c4*d4 + a2*d2*d4 - b2*c2 - a2*c4",
        // f_81
        "a1*a3*b3 + a1*b1*b3 + a3*b1*c1 + b1*b4*c1 + a1*b4*c3 + b2*c1*c3 + a1*b1*d1 + b2*c1*d1 - a3*b3 - b1*b3",
        // f_82
        "a2*a3*b3 + a1*b2*b3 + b2*b4*c1 + a3*b1*c2 + a2*b4*c3 + b2*c2*c3 + a1*b1*d2 + b2*c1*d2 - b2*b3 - a3*b4",
        // f_83
        "a3*a3*b3 + a1*b3*b3 + b3*b4*c1 + a3*b1*c3 + a3*b4*c3 + b2*c3*c3 + a1*b1*d3 + b2*c1*d3 - b1*b1 - a1*b3",
        // f_84
        "a3*a4*b3 + a1*b3*b4 + b4*b4*c1 + a4*b4*c3 + a3*b1*c4 + b2*c3*c4 + a1*b1*d4 + b2*c1*d4 - b1*b2 - a1*b4",
        // f_85
        "a1*a4*b3 + a2*b1*b3 + a4*b1*c1 + b1*b4*c2 + a1*b4*c4 + b2*c1*c4 + a2*b1*d1 + b2*c2*d1 - a4*b3 - b1*b4",
        // f_86
        "a2*a4*b3 + a2*b2*b3 + a4*b1*c2 + b2*b4*c2 + a2*b4*c4 + b2*c2*c4 + a2*b1*d2 + b2*c2*d2 - a4*b4 - b2*b4",
        // f_87
        "a3*a4*b3 + a2*b3*b3 + b3*b4*c2 + a4*b1*c3 + a3*b4*c4 + b2*c3*c4 + a2*b1*d3 + b2*c2*d3 - b1*b2 - a2*b3",
        // f_88
        "a4*a4*b3 + a2*b3*b4 + b4*b4*c2 + a4*b1*c4 + a4*b4*c4 + b2*c4*c4 + a2*b1*d4 + b2*c2*d4 - b2*b2 - a2*b4",
        // f_89
        "b1*b1*b3 + a1*b3*b3 + b1*b3*c1 + b1*b1*d1 + b1*b4*d1 + b2*d1*d1 + a1*b4*d3 + b2*c1*d3 - a3*a3 - a1*b3",
        // f_90
        "b1*b2*b3 + a2*b3*b3 + b1*b3*c2 + b2*b4*d1 + b1*b1*d2 + b2*d1*d2 + a2*b4*d3 + b2*c2*d3 - a3*a4 - a2*b3",
        // f_91
        "a3*b3*b3 + b1*b3*b3 + b1*b3*c3 + b3*b4*d1 + b1*b1*d3 + a3*b4*d3 + b2*c3*d3 + b2*d1*d3 - a1*a3 - a1*b1",
        // f_92
        "a4*b3*b3 + b1*b3*b4 + b1*b3*c4 + b4*b4*d1 + a4*b4*d3 + b2*c4*d3 + b1*b1*d4 + b2*d1*d4 - a1*a4 - a2*b1",
        // f_93
        "b1*b2*b3 + a1*b3*b4 + b1*b4*c1 + b1*b2*d1 + b1*b4*d2 + b2*d1*d2 + a1*b4*d4 + b2*c1*d4 - a3*a4 - a1*b4",
        // f_94
        "b2*b2*b3 + a2*b3*b4 + b1*b4*c2 + b1*b2*d2 + b2*b4*d2 + b2*d2*d2 + a2*b4*d4 + b2*c2*d4 - a4*a4 - a2*b4",
        // f_95
        "b2*b3*b3 + a3*b3*b4 + b1*b4*c3 + b3*b4*d2 + b1*b2*d3 + b2*d2*d3 + a3*b4*d4 + b2*c3*d4 - a2*a3 - a1*b2",
        // f_96
        "a4*b3*b4 + b2*b3*b4 + b1*b4*c4 + b4*b4*d2 + b1*b2*d4 + a4*b4*d4 + b2*c4*d4 + b2*d2*d4 - a2*a4 - a2*b2",
    };
    return eqs;
}

} // namespace cosmash

#endif
