from django.contrib import admin
from .models import ExperimentRun, TrainedPolicy, EvaluationResult


class TrainedPolicyInline(admin.TabularInline):
    model = TrainedPolicy
    extra = 0
    fields = ("graph_index", "is_mean", "probabilities", "episodes", "final_reward")
    readonly_fields = fields
    show_change_link = True


class EvaluationResultInline(admin.TabularInline):
    model = EvaluationResult
    extra = 0
    fields = ("method", "budget", "nmse_linear", "nmse_db", "clamped", "graphs")
    readonly_fields = fields


@admin.register(ExperimentRun)
class ExperimentRunAdmin(admin.ModelAdmin):
    list_display = ['id', 'command', 'status', 'master_seed', 'output_dir', 'created_at']
    list_filter = ['command', 'status', 'created_at']
    search_fields = ['output_dir']
    ordering = ['-created_at']
    date_hierarchy = 'created_at'

    fieldsets = (
        ('Run', {
            'fields': ('command', 'status', 'master_seed', 'output_dir')
        }),
        ('Configuration', {
            'fields': ('config',)
        }),
    )

    inlines = [TrainedPolicyInline, EvaluationResultInline]


@admin.register(TrainedPolicy)
class TrainedPolicyAdmin(admin.ModelAdmin):
    list_display = ['run', 'graph_index', 'is_mean', 'preferred_action', 'episodes', 'final_reward']
    list_filter = ['is_mean', 'created_at']

    def preferred_action(self, obj):
        return obj.preferred_action
    preferred_action.short_description = 'Most likely hop'


@admin.register(EvaluationResult)
class EvaluationResultAdmin(admin.ModelAdmin):
    list_display = ['run', 'method', 'budget', 'nmse_db', 'clamped', 'graphs']
    list_filter = ['method', 'budget', 'clamped']
