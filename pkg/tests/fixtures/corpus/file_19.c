/* synthetic file 19 */
#include <stdio.h>

    call_1();
#ifdef CONFIG_F19_2
int v2 = 1; /* trailing */
/* note 3 */
#ifndef CONFIG_F19_9
    call_4();
    call_5();
#elif !(defined(CONFIG_F19_3))
#if (CONFIG_F19_5 && defined(CONFIG_F19_4)) || (CONFIG_F19_7 || !defined(CONFIG_F19_1) || defined CONFIG_F19_7) || (defined(CONFIG_F19_9) && defined CONFIG_F19_9 && CONFIG_F19_5)
#ifndef CONFIG_F19_8
    call_6();
#elif !(CONFIG_F19_5) && (defined(CONFIG_F19_7) || CONFIG_F19_2 || defined CONFIG_F19_6)
    call_7();
    call_8();
#else
    call_9();
#endif
#if defined(CONFIG_F19_9)
// remark 10

#else
    call_12();
    call_13();
    call_14();
#endif
    call_15();
#elif CONFIG_F19_1
    call_16();
    call_17();
#elif (defined CONFIG_F19_0 || defined(CONFIG_F19_8) || defined(CONFIG_F19_6)) || (defined CONFIG_F19_7 && CONFIG_F19_5 && defined(CONFIG_F19_2)) || !(CONFIG_F19_0)

    call_19();
#endif
#if defined(CONFIG_F19_6)
    call_20();
    call_21();
#elif defined(CONFIG_F19_8)
/* note 22 */
#ifndef CONFIG_F19_7
int v23 = 1; /* trailing */
    call_24();
int v25 = 1; /* trailing */
#elif !(defined CONFIG_F19_7) || !(defined(CONFIG_F19_2)) || (CONFIG_F19_2 && CONFIG_F19_9 && CONFIG_F19_3)
/* note 26 */
    call_27();
    call_28();
#elif (!defined(CONFIG_F19_4) || 0 || defined(CONFIG_F19_5)) && (0 || defined CONFIG_F19_1)
    call_29();
    call_30();
int v31 = 1; /* trailing */
    call_32();
#else
// remark 33
    call_34();
#endif
    call_35();
    call_36();
#elif !((defined(CONFIG_F19_3) || !defined(CONFIG_F19_2) || defined(CONFIG_F19_7)))
#ifndef CONFIG_F19_3
    call_37();
    call_38();
    call_39();
#else

    call_41();
    call_42();
    call_43();
#endif /* guard */
#ifndef CONFIG_F19_0
    call_44();
#elif !(defined(CONFIG_F19_8)) && (defined(CONFIG_F19_6) || defined(CONFIG_F19_4) || defined(CONFIG_F19_9))
    call_45();
    call_46();
#else
    call_47();
    call_48();
    call_49();
#endif
#endif
#elif defined(CONFIG_F19_3)
#if !(0) || (defined(CONFIG_F19_6) && defined CONFIG_F19_1)
    call_50();
    call_51();
#elif defined CONFIG_F19_2
    call_52();
/* note 53 */
    call_54();
#elif CONFIG_F19_8

#else
#ifdef CONFIG_F19_3

// remark 57
    call_58();
#elif !((defined(CONFIG_F19_2) || defined(CONFIG_F19_3)))
    call_59();
    call_60();
#endif
    call_61();
#if 0 && \
    (defined(CONFIG_F19_7) || defined CONFIG_F19_6 || defined CONFIG_F19_3)
// remark 62
    call_63();
    call_64();
int v65 = 1; /* trailing */
#else
    call_66();
    call_67();
    call_68();
    call_69();
#endif
    call_70();
#endif

    call_72();
    call_73();
#endif
    call_74();
#elif defined(CONFIG_F19_8) && CONFIG_F19_1
#ifndef CONFIG_F19_6
#ifdef CONFIG_F19_9
    call_75();
    call_76();
#elif (defined(CONFIG_F19_1) && CONFIG_F19_2 && defined(CONFIG_F19_4)) && !(defined(CONFIG_F19_6)) && !(defined(CONFIG_F19_1))
int v77 = 1; /* trailing */
#if CONFIG_F19_3 || CONFIG_F19_5
// remark 78
    call_79();
#endif
#elif !(1) || !(defined(CONFIG_F19_0)) || (0 && defined CONFIG_F19_1)
    call_80();
#if (CONFIG_F19_5 && \
    CONFIG_F19_4) || CONFIG_F19_2
    call_81();
    call_82();
#elif defined(CONFIG_F19_4)
    call_83();
    call_84();

#elif (defined(CONFIG_F19_4) && defined(CONFIG_F19_7) && defined(CONFIG_F19_9)) && (defined CONFIG_F19_7 || defined CONFIG_F19_7)
    call_86();

    call_88();
int v89 = 1; /* trailing */
#else
/* note 90 */
#endif
#ifdef CONFIG_F19_6
/* note 91 */
    call_92();
    call_93();
#elif (defined(CONFIG_F19_1) && defined(CONFIG_F19_0) && defined(CONFIG_F19_1)) || CONFIG_F19_0 || (CONFIG_F19_8 && CONFIG_F19_3)

    call_95();
    call_96();
    call_97();
#else
    call_98();
    call_99();
    call_100();
#endif
#endif /* guard */
    call_101();
// remark 102
#ifdef CONFIG_F19_2
#ifndef CONFIG_F19_2
    call_103();
    call_104();
    call_105();
    call_106();
#elif (defined(CONFIG_F19_5) || defined(CONFIG_F19_9) || defined(CONFIG_F19_9)) || (defined(CONFIG_F19_1) && defined(CONFIG_F19_6) && defined(CONFIG_F19_7)) || (defined CONFIG_F19_1 && CONFIG_F19_2 && defined(CONFIG_F19_0))
    call_107();

    call_109();
    call_110();
#endif /* guard */
#elif !(defined(CONFIG_F19_8))
    call_111();
    call_112();
#if defined(CONFIG_F19_1)
    call_113();
    call_114();
    call_115();
    call_116();
#else
    call_117();
    call_118();
    call_119();
#endif
/* note 120 */
#endif
#endif /* guard */
#elif (defined CONFIG_F19_6 || defined CONFIG_F19_5 || CONFIG_F19_4) && (defined(CONFIG_F19_3) || defined(CONFIG_F19_8))

    call_122();
    call_123();
#endif
    call_124();
// remark 125
#ifdef CONFIG_F19_0
    call_126();
#endif
#ifdef CONFIG_F19_1

#endif
#ifdef CONFIG_F19_2

#endif
#ifdef CONFIG_F19_3
    call_129();
#endif
#ifdef CONFIG_F19_4
    call_130();
#endif
#ifdef CONFIG_F19_5
    call_131();
#endif
#ifdef CONFIG_F19_6
int v132 = 1; /* trailing */
#endif
#ifdef CONFIG_F19_7
// remark 133
#endif
#ifdef CONFIG_F19_8
    call_134();
#endif
#ifdef CONFIG_F19_9
    call_135();
#endif
