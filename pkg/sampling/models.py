from django.db import models


class BaseModel(models.Model):
    created_at = models.DateTimeField(auto_now_add=True)
    updated_at = models.DateTimeField(auto_now=True)

    class Meta:
        abstract = True


class ExperimentRun(BaseModel):
    COMMAND_CHOICES = [
        ("generate", "Generate"),
        ("train", "Train"),
        ("eval", "Evaluate"),
    ]
    STATUS_CHOICES = [
        ("Running", "Running"),
        ("Completed", "Completed"),
        ("Failed", "Failed"),
    ]

    command = models.CharField(max_length=20, choices=COMMAND_CHOICES)
    status = models.CharField(max_length=20, choices=STATUS_CHOICES, default="Running")
    master_seed = models.PositiveBigIntegerField()
    output_dir = models.CharField(max_length=500)
    config = models.JSONField(default=dict)

    class Meta:
        ordering = ['-created_at']

    def __str__(self):
        return f"{self.command} #{self.pk} (seed {self.master_seed})"


class TrainedPolicy(BaseModel):
    run = models.ForeignKey(ExperimentRun, on_delete=models.CASCADE, related_name='policies')
    graph_index = models.IntegerField(null=True, blank=True)
    is_mean = models.BooleanField(default=False)
    weights = models.JSONField()
    probabilities = models.JSONField()
    episodes = models.IntegerField(default=0)
    final_reward = models.FloatField(null=True, blank=True)

    class Meta:
        verbose_name_plural = "Trained policies"
        ordering = ['run', 'is_mean', 'graph_index']

    def __str__(self):
        if self.is_mean:
            return f"Mean policy of run {self.run_id}"
        return f"Policy for graph {self.graph_index} (run {self.run_id})"

    @property
    def preferred_action(self):
        return 1 + max(range(len(self.probabilities)), key=self.probabilities.__getitem__)


class EvaluationResult(BaseModel):
    METHOD_CHOICES = [
        ("MAB", "Gradient bandit"),
        ("RWS", "Random walk sampling"),
        ("URS", "Uniform random sampling"),
    ]

    run = models.ForeignKey(ExperimentRun, on_delete=models.CASCADE, related_name='results')
    method = models.CharField(max_length=3, choices=METHOD_CHOICES)
    budget = models.FloatField()
    nmse_linear = models.FloatField()
    nmse_db = models.FloatField()
    clamped = models.BooleanField(default=False)
    graphs = models.IntegerField()
    seed = models.PositiveBigIntegerField()

    class Meta:
        ordering = ['run', 'budget', 'method']

    def __str__(self):
        return f"{self.method} @ {self.budget:g}: {self.nmse_db:.2f} dB"
