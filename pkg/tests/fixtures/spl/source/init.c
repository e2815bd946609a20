#include <linux/init.h>

int start_kernel(void)
{
#ifdef CONFIG_ACPI
	acpi_init();
#ifdef CONFIG_ACPI_DEBUG
	acpi_debug_init();
#endif
#endif
#if defined(CONFIG_LEGACY)
	legacy_init();
#endif
#if defined(CONFIG_SMP) && !defined(CONFIG_SCHED)
	smp_without_sched();
#endif
#ifdef CONFIG_NET
#ifndef CONFIG_NET
	impossible();
#endif
#endif
#ifdef CONFIG_GHOST_ONE
	ghost();
#endif
#if defined(MODULE)
	module_only();
#endif
#if defined(CONFIG_EFI) && defined(CONFIG_NET)
	efi_net_boot();
#endif
	return 0;
}
